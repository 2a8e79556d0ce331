"""
    Author: perichain contributors
    Date: 2026.10

    The comparison of the two canonical bases: for every window alcove A with a verified entry A_<= and every small
    weight mu~, d_mu(A_<=) = F(d_mu(A)).
"""

import logging
from typing import Dict, List, Optional, Tuple

from perichain import ConventionError
from perichain.algebra.laurent import ONE
from perichain.algebra.linsolve import solve_triangular
from perichain.bridge.maps import map_d_mu
from perichain.lattice.alcove import Alcove, Window, decompose, height, sort_key
from perichain.lattice.rootdata import GlpWeight, HighestWeightData, dominant_from_tilde, dual_data, omega_small
from perichain.lattice.weyl import permute_weight
from perichain.module.periodic import CanonicalBasisSearch, CanonicalTable, PeriodicFamily, PeriodicVector
from perichain.module.quotient import (
    DEFAULT_TRI_DIRECTION,
    TRI_DIRECTIONS,
    QuotientSpace,
    QuotientVector,
    TensorBasisIndex,
    TensorCanonicalBasis,
    TensorCanonicalTable,
    build_quotient,
)
from perichain.verifier.abs import Verifier

logger = logging.getLogger(__name__)


def tensor_index_of(space: QuotientSpace, mu_tilde: GlpWeight, A: Alcove) -> Tuple[TensorBasisIndex, int]:
    """(t, sign) with d_mu(A) = sign t."""
    w, n = decompose(A, space.c)
    index = TensorBasisIndex(permute_weight(dominant_from_tilde(mu_tilde), w), tuple(n))
    return index, -1 if space.sign_exponent(n) % 2 else 1


def normalised(x: QuotientVector, index: TensorBasisIndex) -> Optional[QuotientVector]:
    """x scaled to coefficient 1 at index; None if that coefficient is not a unit."""
    lead = x.coefficient(index)
    if lead == ONE:
        return x
    if lead == -ONE:
        return -x
    return None


def family_coordinates(vector: PeriodicVector, family: PeriodicFamily, depth: int = 4) -> Tuple[int, bool]:
    """
    The number of bar-fixed family members needed for vector down to depth below its lowest term, and whether they
    express it exactly.
    """
    cut = min(height(A) for A in vector.terms) - depth
    coordinates, remainder = solve_triangular(family.member, vector, order=sort_key,
                                              below=lambda A: height(A) < cut)
    return len(coordinates), remainder.is_zero()


def compare_weight(space: QuotientSpace, mu_tilde: GlpWeight, periodic: CanonicalTable,
                   tensor: TensorCanonicalTable) -> List[Dict]:
    """
    One comparison per verified periodic entry; returns (alcove, status, witness) dicts. A missing or uncertified
    F(t) counts as a mismatch.
    """
    rows = []
    for A in periodic.verified():
        lhs = map_d_mu(space, mu_tilde, periodic[A])
        index, sign = tensor_index_of(space, mu_tilde, A)
        entry = tensor.entries.get(index)
        witness = dict(alcove=A.to_record(), index=index.to_record(), sign=sign, d_A_leq=lhs.to_records())
        if entry is None or not entry.verified:
            reason = "outside the tensor table" if entry is None else entry.reason
            witness.update(reason=f"F(t) is not certified: {reason}")
            rows.append(dict(alcove=A, status="mismatch", witness=witness))
            continue
        witness["F_t"] = entry.vector.to_records()
        left, right = normalised(lhs, index), normalised(entry.vector.scale(sign), index)
        status = "match" if left is not None and left == right else "mismatch"
        rows.append(dict(alcove=A, status=status, witness=witness))
    return rows


def pin_tri_direction(data: HighestWeightData = None, radius: int = 1, search_radius: int = 1,
                      **tensor_conf) -> str:
    """
    Chooses the side of the lattice for F(t) empirically: the direction under which d_mu(A_<=) = F(d_mu(A)) holds on
    a small instance, with at least one entry having lower terms.

    Raises:
        ConventionError: if no direction or both directions pass.
    """
    data = dual_data(3, (1, 1)) if data is None else data
    win = Window(radius)
    periodic = CanonicalBasisSearch(data, search_radius).table(win)
    space = build_quotient(data)
    passing = []
    for direction in TRI_DIRECTIONS:
        rows = []
        for mu_tilde in omega_small(data.d, data.p):
            tensor = TensorCanonicalBasis(space, mu_tilde, radius, direction, **tensor_conf).table()
            rows.extend(compare_weight(space, mu_tilde, periodic, tensor))
        informative = sum(1 for row in rows if row["status"] == "match" and len(row["witness"]["d_A_leq"]) > 1)
        if rows and all(row["status"] != "mismatch" for row in rows) and informative:
            passing.append(direction)
    if len(passing) != 1:
        raise ConventionError(f"The triangularity direction could not be pinned on c={data.c}, p={data.p}: "
                              f"passing directions {passing}!")
    logger.info(f"Triangularity direction pinned to '{passing[0]}' on c={data.c}, p={data.p}.")
    return passing[0]


class BasisComparisonVerifier(Verifier):
    """
    Cross-checks the periodic canonical basis against the tensor canonical basis through d_mu for every small mu~.
    Every window alcove is compared; a tensor entry that cannot be certified is a mismatch. Every row carries the
    path word of A_<= and its coordinates in the bar-fixed family of M_c.
    """

    claim = "basis_comparison"

    def verifier_init(self, tri_direction: str = DEFAULT_TRI_DIRECTION, search_radius: int = 1,
                      family_word_length: int = 4, family_cap: int = 400, max_power: int = 2, z_radius: int = None,
                      closure_cap: int = 200, coordinate_depth: int = 4, show_progress: bool = False):
        """
        Args:
            tri_direction: str = 'pos'
                The side of the lattice for F(t): 'pos', 'neg' or 'auto'. 'auto' runs pin_tri_direction() first.
            search_radius: int = 1
                The translation radius of the periodic canonical basis search.
            family_word_length, family_cap, max_power, z_radius, closure_cap:
                The parameters of the tensor canonical basis, see perichain.module.quotient.TensorCanonicalBasis.
            coordinate_depth: int = 4
                How far below an entry its bar-fixed family coordinates are computed.
        """
        assert tri_direction in TRI_DIRECTIONS + ("auto",), \
            f"tri_direction must be one of {TRI_DIRECTIONS + ('auto',)}, but got {tri_direction}!"
        self.tri_direction = tri_direction
        self.search_radius = search_radius
        self.tensor_conf = dict(family_word_length=family_word_length, family_cap=family_cap, max_power=max_power,
                                z_radius=z_radius, closure_cap=closure_cap)
        self.coordinate_depth = coordinate_depth
        self.show_progress = show_progress

    def __call__(self, data: HighestWeightData, win: Window, **kwargs) -> List[Dict]:
        assert data.p > data.d, f"The comparison needs p > d, but got p={data.p}, d={data.d}!"
        direction = self.tri_direction
        if direction == "auto":
            direction = pin_tri_direction(**self.tensor_conf)

        search = CanonicalBasisSearch(data, self.search_radius, show_progress=self.show_progress)
        periodic = search.table(win)
        family = search.family()
        space = build_quotient(data)

        report = []
        for mu_tilde in omega_small(data.d, data.p):
            tensor = TensorCanonicalBasis(space, mu_tilde, win.radius, direction, show_progress=self.show_progress,
                                          **self.tensor_conf).table()
            for row in compare_weight(space, mu_tilde, periodic, tensor):
                A = row["alcove"]
                members, exact = family_coordinates(periodic[A], family, self.coordinate_depth)
                row["witness"].update(provenance=periodic.entries[A].to_record()["provenance"],
                                      family_members=members, family_exact=exact)
                instance = dict(p=data.p, c=list(data.c), mu_tilde=list(mu_tilde.finite_part), radius=win.radius,
                                tri_direction=direction)
                report.append(self.record(instance, row["status"], row["witness"]))
        unverified = [A.to_record() for A in periodic.alcoves() if A not in periodic.verified()]
        if unverified:
            instance = dict(p=data.p, c=list(data.c), radius=win.radius, part="periodic_window")
            report.append(self.record(instance, "indeterminate", dict(unverified=unverified)))
        return report
