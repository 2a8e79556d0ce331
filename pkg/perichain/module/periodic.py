"""
    Author: perichain contributors
    Date: 2026.10

    The periodic module M_c: the free module on the alcoves of the slab S_c with its left H'-action and right
    R'_c-action, the generator m_c, the bar-fixed spanning family and the canonical basis {A_<=}.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from perichain import ConventionError, SpanError, WindowError
from perichain.algebra.hecke import HeckeElt, bar_basis, rho
from perichain.algebra.laurent import LaurentScalar, ONE, QDIFF, QINV, ZERO, q_power
from perichain.algebra.linsolve import solve_triangular
from perichain.lattice.rootdata import (
    Composition,
    HighestWeightData,
    Weight,
    alpha_c,
    blocks,
    coset_sign_exponent,
    pairing,
)
from perichain.lattice.alcove import (
    Alcove,
    Window,
    alcove_of,
    compose_alcove,
    coset_vectors,
    decompose,
    g_coset,
    g_gamma,
    generic_less,
    height,
    in_A_c,
    left_act,
    sort_key,
)
from perichain.lattice.weyl import (
    Permutation,
    compose_perm,
    finite,
    inversions,
    min_left_reps,
    parabolic_subgroup,
    reduced_word,
    sigma_c,
    sigma_min,
)
from perichain.module.abs import SparseVector

logger = logging.getLogger(__name__)


class PeriodicVector(SparseVector):
    """A finitely supported function A_c -> Z[q, q^-1]."""

    @staticmethod
    def key_order(key: Alcove):
        return sort_key(key)

    @staticmethod
    def key_record(key: Alcove):
        return key.to_record()

    def leading(self) -> Alcove:
        """The support alcove that is largest in the refined order."""
        assert not self.is_zero(), "The zero vector has no leading alcove!"
        return max(self.terms, key=sort_key)


def periodic_alcove(A: Alcove) -> PeriodicVector:
    return PeriodicVector.basis(A)


# --- the H'-action --- #
def act_t(i: int, v: PeriodicVector, c: Composition) -> PeriodicVector:
    """t_i . v for 1 <= i <= d, linear extension of the three-case rule on alcoves."""
    pairs = []
    for A, coef in v.terms.items():
        assert 1 <= i <= A.d, f"t_{i} does not act for d={A.d}!"
        B = left_act(i, A)
        if not in_A_c(B, c):
            pairs.append((A, -QINV * coef))
        elif generic_less(A, B):
            pairs.append((B, coef))
        else:
            pairs.append((B, coef))
            pairs.append((A, QDIFF * coef))
    return PeriodicVector.from_terms(pairs)


def act_t_inv(i: int, v: PeriodicVector, c: Composition) -> PeriodicVector:
    """t_i^-1 = t_i - (q - q^-1)."""
    return act_t(i, v, c) - v.scale(QDIFF)


def act_hecke(h: HeckeElt, v: PeriodicVector, c: Composition) -> PeriodicVector:
    """h . v for h in H' through reduced words; t_{s_1 ... s_r} . v = t_1 . (... (t_r . v))."""
    result = PeriodicVector()
    for w, coef in h.terms.items():
        word, k = reduced_word(w)
        assert k == 0, f"Only H' acts on M_c, but {w} has pi-power {k}!"
        image = v
        for i in reversed(word):
            image = act_t(i, image, c)
        result = result + image.scale(coef)
    return result


def raise_(i: int, v: PeriodicVector, c: Composition) -> PeriodicVector:
    """C_i . v = (t_i + q^-1) . v; C_i is bar-fixed because t_i^-1 + q = t_i + q^-1."""
    return act_t(i, v, c) + v.scale(QINV)


# --- the R'_c-action --- #
def translate(v: PeriodicVector, n: Tuple[int, ...], c: Composition) -> PeriodicVector:
    """g_n, without the sign of the R'_c-action."""
    if not any(n):
        return v
    return v.map_keys(lambda A: g_coset(A, n, c))


def act_coset(v: PeriodicVector, n: Tuple[int, ...], c: Composition) -> PeriodicVector:
    """v . x_{gamma + Z I_c} for any gamma with block sums n: (-1)^{(gamma : alpha_c)} g_n(v)."""
    sign = -1 if coset_sign_exponent(n, c) % 2 else 1
    return translate(v, n, c).scale(sign)


def act_x(v: PeriodicVector, gamma: Weight, c: Composition) -> PeriodicVector:
    """v . x_{gamma + Z I_c} for gamma in Q."""
    assert sum(gamma) == 0, f"R'_c is spanned by x_gamma with gamma in Q, but got {gamma}!"
    sign = -1 if pairing(gamma, alpha_c(c)) % 2 else 1
    return v.map_keys(lambda A: g_gamma(A, gamma, c)).scale(sign)


# --- the generator m_c --- #
def build_m_c(data: HighestWeightData) -> PeriodicVector:
    """
    m_c = q^{-nu_d} sum_{w in W_d} q^{l(w)} A'_+ . w sigma_c.

    Raises:
        ConventionError: if some summand alcove leaves A_c.
    """
    sigma = sigma_c(data)
    pairs = []
    for w in parabolic_subgroup(data.d_comp):
        A = alcove_of(compose_perm(w, sigma))
        if not in_A_c(A, data.c):
            raise ConventionError(f"The summand {A} of m_c for c={data.c} does not lie in A_c!")
        pairs.append((A, q_power(inversions(w) - data.nu_d)))
    return PeriodicVector.from_terms(pairs)


def m_c_from_hecke(data: HighestWeightData) -> PeriodicVector:
    """q^{-nu_d} rho_d bar(t_{sigma_c}) . A'_+, the second expression of m_c."""
    rho_d, _ = rho(data.d_comp)
    sigma = sigma_c(data)
    h = rho_d * bar_basis(finite(sigma))
    return act_hecke(h, periodic_alcove(alcove_of(tuple(range(data.d)))), data.c).scale(q_power(-data.nu_d))


def leading_alcove_of_m_c(data: HighestWeightData) -> Alcove:
    """A'_+ . w_d sigma_c."""
    return alcove_of(sigma_min(data))


# --- the bar-fixed spanning family --- #
@dataclass
class RaisedClass:
    """
    Everything the search knows about one class {g_n(A'_+ . w)} of A_c.

    raised is the bar-fixed vector C_{i_r} ... C_{i_1} g_{n_1}(...) with unit coefficient at A'_+ . w, and entry is
    (A'_+ . w)_<=. Both are stored at the representative, i.e. translated back by g_{-n}.
    """
    w: Permutation
    raised: PeriodicVector
    entry: PeriodicVector
    provenance: Tuple = ()


class PeriodicFamily:
    """
    The bar-fixed family {g_n(R_w)}: exactly one member with unit leading coefficient at every alcove of a covered
    class. Members are produced on demand because the family is infinite.
    """

    def __init__(self, c: Composition, classes: Dict[Permutation, RaisedClass]):
        self.c = tuple(c)
        self.classes = classes

    def member(self, A: Alcove) -> Optional[PeriodicVector]:
        w, n = decompose(A, self.c)
        if w not in self.classes:
            return None
        return translate(self.classes[w].raised, n, self.c)

    def provenance(self, A: Alcove) -> Tuple:
        w, n = decompose(A, self.c)
        return self.classes[w].provenance + (("x", n),)


class _Postponed(Exception):
    """The elimination met a class whose entry is not known yet."""

    def __init__(self, alcove: Alcove):
        super(_Postponed, self).__init__(f"{alcove} belongs to a class without an entry.")
        self.alcove = alcove


class CanonicalBasisSearch:
    """
    Computes (A'_+ . w)_<= for every w in W^c, starting from m_c and moving up with C_i = t_i + q^-1.

    An up-move from a known entry of A to B = s_i . A > A gives the bar-fixed vector C_i . A_<= with unit coefficient
    at B. Its other coefficients are pushed into q^-1 Z[q^-1] from the top down by subtracting bar-fixed multiples of
    known entries. A coefficient that sits at a lower translate g_m(B) of B itself is settled against the entry under
    construction: g_m preserves the generic order and lowers the height, so every term of g_m(B_<=) is charged once
    the matching term of B_<= has become final.

    Entries of the whole slab follow by translation, since g_n commutes with the H'-action and with iota_M.
    """

    def __init__(self, data: HighestWeightData, search_radius: int = 1, max_steps: int = 20000,
                 show_progress: bool = False):
        assert search_radius >= 0, f"search_radius must be non-negative, but got {search_radius}!"
        self.data = data
        self.c = tuple(data.c)
        self.ell = len(blocks(self.c))
        self.search_radius = search_radius
        self.max_steps = max_steps
        self.show_progress = show_progress
        self.classes: Dict[Permutation, RaisedClass] = {}

    # --- lookups --- #
    def entry_of(self, A: Alcove) -> Optional[PeriodicVector]:
        w, n = decompose(A, self.c)
        if w not in self.classes:
            return None
        return translate(self.classes[w].entry, n, self.c)

    def family(self) -> PeriodicFamily:
        return PeriodicFamily(self.c, self.classes)

    # --- elimination --- #
    def eliminate(self, top: Alcove, raised: PeriodicVector) -> PeriodicVector:
        """
        Turns a bar-fixed vector with unit coefficient at top into top_<=.

        Raises:
            ConventionError: if the coefficient at top is not 1, if some other term is not strictly below top or if
                the elimination does not terminate.
            _Postponed: if a coefficient has to be cleared with the entry of a class that is not known yet.
        """
        if raised.coefficient(top) != ONE:
            raise ConventionError(f"The raised vector has coefficient {raised.coefficient(top)} at its top {top}!")
        for D in raised.terms:
            if D != top and not generic_less(D, top):
                raise ConventionError(f"The raised vector with top {top} has the term {D} that is not below it!")

        w_top, n_top = decompose(top, self.c)
        coeffs = dict(raised.terms)
        final: Dict[Alcove, LaurentScalar] = {}
        debts: List[Tuple[LaurentScalar, Tuple[int, ...]]] = []

        for _ in range(self.max_steps):
            pending = [D for D, f in coeffs.items() if D != top and D not in final and f]
            if not pending:
                break
            D = max(pending, key=sort_key)
            f = coeffs[D]
            if not f.is_sub_unitriangular():
                r = f.symmetric_completion()
                w, n = decompose(D, self.c)
                if w == w_top:
                    # D = g_m(top): subtract r g_m(top_<=) term by term
                    m = tuple(a - b for a, b in zip(n, n_top))
                    debts.append((r, m))
                    coeffs[D] = f - r
                    for D_done, f_done in final.items():
                        target = g_coset(D_done, m, self.c)
                        coeffs[target] = coeffs.get(target, ZERO) - r * f_done
                else:
                    known = self.entry_of(D)
                    if known is None:
                        raise _Postponed(D)
                    for D_low, f_low in known.terms.items():
                        coeffs[D_low] = coeffs.get(D_low, ZERO) - r * f_low
            final[D] = coeffs[D]
            for r, m in debts:
                target = g_coset(D, m, self.c)
                coeffs[target] = coeffs.get(target, ZERO) - r * final[D]
        else:
            raise ConventionError(f"The elimination below {top} did not finish within {self.max_steps} steps!")

        result = PeriodicVector(coeffs)
        certify_entry(top, result)
        return result

    # --- search --- #
    def _candidates(self):
        """(w, n, i, A, B) for every up-move out of a translate of a known class."""
        for w in sorted(self.classes):
            for n in coset_vectors(self.ell, self.search_radius):
                A = compose_alcove(w, n, self.c)
                for i in range(1, self.data.d + 1):
                    B = left_act(i, A)
                    if in_A_c(B, self.c) and generic_less(A, B):
                        yield w, n, i, A, B

    def run(self) -> "CanonicalBasisSearch":
        """
        Raises:
            WindowError: if some class of W^c cannot be reached with the current search radius.
        """
        if self.classes:
            return self
        m_c = build_m_c(self.data)
        w0, n0 = decompose(leading_alcove_of_m_c(self.data), self.c)
        assert not any(n0), f"The leading alcove of m_c should be a class representative, but it has coset {n0}!"
        certify_entry(compose_alcove(w0, n0, self.c), m_c)
        self.classes[w0] = RaisedClass(w=w0, raised=m_c, entry=m_c)

        targets = set(min_left_reps(self.c))
        with tqdm(total=len(targets), disable=not self.show_progress, desc="classes") as bar:
            bar.update(1)
            while len(self.classes) < len(targets):
                progress = False
                for w, n, i, A, B in list(self._candidates()):
                    w_new, n_new = decompose(B, self.c)
                    if w_new in self.classes:
                        continue
                    source = self.classes[w]
                    raised = raise_(i, translate(source.entry, n, self.c), self.c)
                    try:
                        entry = self.eliminate(B, raised)
                    except _Postponed as e:
                        logger.debug(f"Class {w_new} postponed: {e}")
                        continue
                    back = tuple(-x for x in n_new)
                    self.classes[w_new] = RaisedClass(
                        w=w_new,
                        raised=translate(raised, back, self.c),
                        entry=translate(entry, back, self.c),
                        provenance=source.provenance + (("x", n), ("C", i), ("x", back)),
                    )
                    progress = True
                    bar.update(1)
                if not progress:
                    missing = sorted(targets - set(self.classes))
                    raise WindowError(
                        f"{len(missing)} classes of W^c for c={self.c} are unreachable with search radius "
                        f"{self.search_radius}!", uncovered=[alcove_of(w) for w in missing])
        logger.info(f"Canonical basis of M_c for c={self.c}: {len(self.classes)} classes computed.")
        return self

    def table(self, win: Window) -> "CanonicalTable":
        """
        Every entry is a translate of an exact class entry and is re-certified, so the whole window is covered.
        in_window additionally records whether the support plus one raise step stays inside the window.
        """
        self.run()
        entries = {}
        for A in win.alcoves(self.c):
            w, n = decompose(A, self.c)
            vector = translate(self.classes[w].entry, n, self.c)
            try:
                certify_entry(A, vector)
                verified = True
            except ConventionError as e:
                logger.warning(f"The entry of {A} lost its certificate after translation: {e}")
                verified = False
            entries[A] = CanonicalEntry(
                alcove=A, vector=vector,
                provenance=self.classes[w].provenance + (("x", n),),
                verified=verified,
                in_window=all(win.contains(E, self.c) for D in vector.terms for E in raise_step(D, self.c)),
            )
        return CanonicalTable(c=self.c, radius=win.radius, entries=entries)


def raise_step(A: Alcove, c: Composition) -> List[Alcove]:
    """A together with the alcoves s_i . A of the slab that C_i can reach from it."""
    return [A] + [B for B in (left_act(i, A) for i in range(1, A.d + 1)) if in_A_c(B, c)]


def certify_entry(top: Alcove, vector: PeriodicVector):
    """
    The certificate of a candidate top_<= apart from bar-invariance: unit coefficient at top, every other
    term strictly below top with a coefficient in q^-1 Z[q^-1].

    Raises:
        ConventionError: on the first violation.
    """
    if vector.coefficient(top) != ONE:
        raise ConventionError(f"The entry of {top} has coefficient {vector.coefficient(top)} at {top}!")
    for D, f in vector.terms.items():
        if D == top:
            continue
        if not generic_less(D, top):
            raise ConventionError(f"The entry of {top} has the term {D} that is not below {top}!")
        if not f.is_sub_unitriangular():
            raise ConventionError(f"The entry of {top} has the coefficient {f} at {D} outside q^-1 Z[q^-1]!")


@dataclass
class CanonicalEntry:
    alcove: Alcove
    vector: PeriodicVector
    provenance: Tuple
    verified: bool
    in_window: bool = True

    def to_record(self) -> dict:
        return dict(
            alcove=self.alcove.to_record(),
            terms=self.vector.to_records(),
            provenance=[[step, list(arg) if isinstance(arg, tuple) else arg] for step, arg in self.provenance],
            verified=self.verified,
            in_window=self.in_window,
        )


@dataclass
class CanonicalTable:
    """The entries A_<= for every alcove A of a window."""
    c: Composition
    radius: int
    entries: Dict[Alcove, CanonicalEntry] = field(default_factory=dict)

    def __getitem__(self, A: Alcove) -> PeriodicVector:
        return self.entries[A].vector

    def __contains__(self, A: Alcove) -> bool:
        return A in self.entries

    def __len__(self):
        return len(self.entries)

    def alcoves(self) -> List[Alcove]:
        return sorted(self.entries, key=sort_key)

    def verified(self) -> List[Alcove]:
        return [A for A in self.alcoves() if self.entries[A].verified]

    def in_window(self) -> List[Alcove]:
        return [A for A in self.alcoves() if self.entries[A].in_window]

    def to_records(self) -> List[dict]:
        return [self.entries[A].to_record() for A in self.alcoves()]


def spanning_family(data: HighestWeightData, win: Window, search_radius: int = 1,
                    search: CanonicalBasisSearch = None) -> List[Tuple[PeriodicVector, Alcove]]:
    """
    One bar-fixed vector with unit leading coefficient for every alcove of the window.

    Raises:
        WindowError: with the uncovered alcoves if the search cannot reach every class.
    """
    search = CanonicalBasisSearch(data, search_radius) if search is None else search
    try:
        family = search.run().family()
    except WindowError as e:
        uncovered = [A for A in win.alcoves(data.c) if decompose(A, data.c)[0] not in search.classes]
        raise WindowError(str(e), uncovered=uncovered)
    return [(family.member(A), A) for A in win.alcoves(data.c)]


def canonical_basis(data: HighestWeightData, win: Window, search_radius: int = 1,
                    show_progress: bool = False) -> CanonicalTable:
    return CanonicalBasisSearch(data, search_radius, show_progress=show_progress).table(win)


def iota_M_on_span(v: PeriodicVector, family: PeriodicFamily, depth: int = 4) -> PeriodicVector:
    """
    iota_M(v) through v = sum_A p_A g_n(R_w): the result is sum_A bar(p_A) g_n(R_w).

    The expansion of a finite vector in the family may be an infinite descending series, which converges in the
    completion of M_c. Terms of the series only reach down from their leading alcove, so the result is exact on
    every alcove of height at least min_height(v) - depth and is returned truncated there.

    Raises:
        SpanError: if some alcove above the cut has no family member.
    """
    if v.is_zero():
        return v
    cut = min(height(A) for A in v.terms) - depth
    coordinates, remainder = solve_triangular(
        family.member, v, order=sort_key, below=lambda A: height(A) < cut)
    uncovered = [A for A in remainder.terms if height(A) >= cut]
    if uncovered:
        raise SpanError(f"{uncovered[:3]} have no member in the bar-fixed family!")
    result = PeriodicVector()
    for A, coef in coordinates.items():
        result = result + family.member(A).scale(coef.bar())
    return truncate_below(result, cut)


def truncate_below(v: PeriodicVector, cut: int) -> PeriodicVector:
    """Drops every term of height below cut."""
    return PeriodicVector({A: f for A, f in v.terms.items() if height(A) >= cut})
