"""
    Author: perichain contributors
    Date: 2026.10

    The quotient N_c = V^{(x)d} (x)_{H'_c} A^- by the relations v.t_i + q^-1 v and v.x_{alpha_i} - q^2 v (i in I_c),
    its basis {t(index)}, the cyclic vector v_c, the order <=_c, the bar-fixed word family and the canonical basis
    F(t) obtained from the bar involution on the span of that family.

    The reduction has a closed form per block of c. For a block whose entries are gamma_j = r_j - p kappa_j:
    [u_gamma] vanishes if two residues r_j coincide; otherwise it equals q^{2M} (-q^-1)^{inv} times the class of the
    pure tensor whose block lists the residues in decreasing order with -p n added to its first entry. Here
    n = sum kappa, inv counts the pairs j < l with r_j < r_l and M = sum_{i<k} (K_i - n) for the partial sums K_i.
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Set, Tuple

from sympy.utilities.iterables import strongly_connected_components, topological_sort
from tqdm import tqdm

from perichain import ConventionError, SpanError
from perichain.algebra.laurent import LaurentScalar, ONE, neg_q_power, q_power
from perichain.algebra.linsolve import EchelonSpan, from_field
from perichain.lattice.alcove import Window, coset_vectors
from perichain.lattice.rootdata import (
    GlpWeight,
    HighestWeightData,
    Weight,
    blocks,
    coset_sign_exponent,
    dominant_from_tilde,
    level,
    parabolic_simples,
    residue,
)
from perichain.module.abs import SparseVector
from perichain.module.tensor import (
    Generator,
    TensorVector,
    act_t,
    act_x,
    affine_weight_of,
    chevalley_act,
)

logger = logging.getLogger(__name__)

TRI_DIRECTIONS = ("neg", "pos")
# F(t) = t mod q L
DEFAULT_TRI_DIRECTION = "pos"


@dataclass(frozen=True, order=True)
class TensorBasisIndex:
    """
    The basis vector t = (u_{residues} (x) 1) . z_{coset}. Inside every block of c the residues are strictly
    decreasing; coset holds one integer per block.
    """
    residues: Weight
    coset: Tuple[int, ...]

    def to_record(self) -> dict:
        return dict(residues=list(self.residues), coset=list(self.coset))


class QuotientVector(SparseVector):
    """A finitely supported combination of the basis vectors t(index)."""

    @staticmethod
    def key_record(key: TensorBasisIndex):
        return key.to_record()


class QuotientSpace:
    """
    The sign-character quotient for one HighestWeightData. The reduction is exact on every pure tensor, so the
    space itself is not truncated; windows only enter through window_basis().
    """

    def __init__(self, data: HighestWeightData):
        self.data = data
        self.p = data.p
        self.c = tuple(data.c)
        self.d = data.d
        self.block_ranges = blocks(self.c)

    # --- indices --- #
    def sign_exponent(self, coset: Sequence[int]) -> int:
        """s(n) = sum_b n_b (c_b - 1) = (gamma : alpha_c) for gamma = sum_b n_b eps_{first entry of b}."""
        return coset_sign_exponent(tuple(coset), self.c)

    def representative(self, index: TensorBasisIndex) -> Weight:
        """The pure tensor u_norm with [u_norm] = (-q)^{s(n)} t(index)."""
        gamma = list(index.residues)
        for (start, _), n in zip(self.block_ranges, index.coset):
            gamma[start] -= self.p * n
        return tuple(gamma)

    def is_index(self, residues: Sequence[int]) -> bool:
        return all(
            all(residues[j] > residues[j + 1] for j in range(start, stop - 1)) for start, stop in self.block_ranges
        ) and all(1 <= r <= self.p for r in residues)

    def normal_form(self, gamma: Sequence[int]) -> Optional[Tuple[LaurentScalar, TensorBasisIndex]]:
        """(scalar, index) with [u_gamma] = scalar t(index), or None if [u_gamma] = 0."""
        assert len(gamma) == self.d, f"{gamma} does not have d={self.d} entries!"
        residues, coset = [], []
        exponent, sign = 0, 1
        for start, stop in self.block_ranges:
            r = [residue(m, self.p) for m in gamma[start:stop]]
            kappa = [level(m, self.p) for m in gamma[start:stop]]
            if len(set(r)) < len(r):
                return None
            inv = sum(1 for j in range(len(r)) for k in range(j + 1, len(r)) if r[j] < r[k])
            n = sum(kappa)
            partial, m_total = 0, 0
            for i in range(len(kappa) - 1):
                partial += kappa[i]
                m_total += partial - n
            exponent += 2 * m_total - inv
            sign *= -1 if inv % 2 else 1
            residues.extend(sorted(r, reverse=True))
            coset.append(n)
        scalar = q_power(exponent, sign) * neg_q_power(self.sign_exponent(coset))
        return scalar, TensorBasisIndex(tuple(residues), tuple(coset))

    # --- reduction and lifting --- #
    def reduce(self, v: TensorVector) -> QuotientVector:
        pairs = []
        for gamma, coef in v.terms.items():
            normal = self.normal_form(gamma)
            if normal is not None:
                scalar, index = normal
                pairs.append((index, scalar * coef))
        return QuotientVector.from_terms(pairs)

    def lift(self, x: QuotientVector) -> TensorVector:
        """A tensor vector whose class is x: t(index) lifts to (-q)^{-s(n)} u_norm."""
        return TensorVector.from_terms(
            (self.representative(index), coef * neg_q_power(-self.sign_exponent(index.coset)))
            for index, coef in x.terms.items()
        )

    def basis_vector(self, index: TensorBasisIndex) -> QuotientVector:
        assert self.is_index(index.residues), f"{index} is not a basis index for c={self.c}!"
        return QuotientVector.basis(index)

    # --- actions --- #
    def act_chevalley(self, gen: Generator, x: QuotientVector) -> QuotientVector:
        """The plain U-action descends because it commutes with the right H-action."""
        if x.is_zero():
            return x
        return self.reduce(chevalley_act(gen, self.lift(x), self.p))

    def act_word(self, word: Sequence[Generator], x: QuotientVector) -> QuotientVector:
        for gen in reversed(word):
            x = self.act_chevalley(gen, x)
        return x

    def act_z(self, x: QuotientVector, m: Sequence[int]) -> QuotientVector:
        """x . z_m; on the basis t(residues, n) . z_m = t(residues, n + m)."""
        m = tuple(m)
        return x.map_keys(lambda index: TensorBasisIndex(index.residues, tuple(a + b for a, b in zip(index.coset, m))))

    def act_rc(self, x: QuotientVector, m: Sequence[int]) -> QuotientVector:
        """x . x_{gamma + Z I_c} = (-1)^{s(m)} x . z_m."""
        sign = -1 if self.sign_exponent(m) % 2 else 1
        return self.act_z(x, m).scale(sign)

    # --- weights --- #
    def affine_weight(self, index: TensorBasisIndex) -> GlpWeight:
        return affine_weight_of(self.representative(index), self.p)

    def factor_weights(self, index: TensorBasisIndex) -> List[GlpWeight]:
        """The affine weight of every tensor factor V^[c_b] of the representative."""
        gamma = self.representative(index)
        return [affine_weight_of(gamma[start:stop], self.p) for start, stop in self.block_ranges]

    def vector_weight(self, x: QuotientVector) -> GlpWeight:
        weights = {self.affine_weight(index) for index in x.terms}
        if len(weights) != 1:
            raise ValueError(f"The quotient vector is not homogeneous: {sorted(map(repr, weights))}!")
        return weights.pop()

    # --- windows --- #
    def indices_of_weight(self, mu_tilde: GlpWeight) -> List[Weight]:
        """All residue tuples with the multiplicities of mu_tilde that are strictly decreasing in every block."""
        mu = dominant_from_tilde(mu_tilde.finite())
        return sorted({tuple(r) for r in permutations(mu) if self.is_index(r)}, reverse=True)

    def window_basis(self, mu_tilde: GlpWeight, radius: int) -> List[TensorBasisIndex]:
        """The basis vectors of finite weight mu_tilde in X' with |n|_inf <= radius."""
        cosets = Window(radius).cosets(self.c)
        return sorted(TensorBasisIndex(r, n) for r in self.indices_of_weight(mu_tilde) for n in cosets)

    # --- relation checks --- #
    def relation_defects(self, gamma: Sequence[int]) -> List[Tuple[str, QuotientVector]]:
        """The classes of u.t_i + q^-1 u and u.x_{alpha_i} - q^2 u for i in I_c that fail to vanish."""
        u = TensorVector.basis(tuple(gamma))
        defects = []
        for i in sorted(parabolic_simples(self.c)):
            relation = act_t(i, u, self.p) + u.scale(q_power(-1))
            reduced = self.reduce(relation)
            if not reduced.is_zero():
                defects.append((f"t_{i}", reduced))
            alpha_i = tuple(1 if j == i - 1 else -1 if j == i else 0 for j in range(self.d))
            relation = act_x(u, alpha_i, self.p) - u.scale(q_power(2))
            reduced = self.reduce(relation)
            if not reduced.is_zero():
                defects.append((f"x_alpha_{i}", reduced))
        return defects


def build_quotient(data: HighestWeightData, mu_tilde: GlpWeight = None, win: Window = None) -> QuotientSpace:
    """
    Raises:
        AssertionError: if p <= d or mu_tilde is not a weight of V^{(x)d}.
    """
    assert data.p > data.d, f"The quotient is only used for p > d, but got p={data.p}, d={data.d}!"
    if mu_tilde is not None:
        assert mu_tilde.p == data.p, f"{mu_tilde} is not a gl_{data.p} weight!"
        assert all(x >= 0 for x in mu_tilde.finite_part) and sum(mu_tilde.finite_part) == data.d, \
            f"{mu_tilde} is not in Omega for d={data.d}!"
    space = QuotientSpace(data)
    if win is not None and mu_tilde is not None:
        logger.info(f"Quotient for c={data.c}, weight {mu_tilde}: {len(space.window_basis(mu_tilde, win.radius))} "
                    f"basis vectors in the window of radius {win.radius}.")
    return space


def cyclic_vector(space: QuotientSpace) -> QuotientVector:
    """v_c: the class of the concatenation of (c_i, ..., 1) over the blocks."""
    return space.basis_vector(TensorBasisIndex(space.data.cyclic_pattern, tuple(0 for _ in space.block_ranges)))


# --- the order <=_c --- #
def less_c_weights(lower: Sequence[GlpWeight], upper: Sequence[GlpWeight]) -> bool:
    """
    lower <_c upper for tuples of factor weights: equal totals, and every proper prefix sum of lower - upper lies
    in the positive cone Q^a_+ without being zero, so iota_N moves weight into the first factors. With a single
    factor equal weights force equal indices, so nothing is strictly below.
    """
    assert len(lower) == len(upper), "Both sides need the same number of factors!"
    if len(lower) < 2:
        return False
    total = lower[0] - upper[0]
    for m in range(1, len(lower)):
        if total.is_zero() or not total.in_positive_cone():
            return False
        total = total + (lower[m] - upper[m])
    return total.is_zero()


def less_c(lower: TensorBasisIndex, upper: TensorBasisIndex, space: QuotientSpace) -> bool:
    return less_c_weights(space.factor_weights(lower), space.factor_weights(upper))


def leq_c(t: TensorBasisIndex, t_prime: TensorBasisIndex, space: QuotientSpace) -> bool:
    """t_prime <=_c t."""
    return t == t_prime or less_c(t_prime, t, space)


# --- the bar-fixed family --- #
def chevalley_generators(p: int, max_power: int = 2) -> List[Generator]:
    return [Generator(kind, a, n) for n in range(1, max_power + 1) for kind in ("e", "f") for a in range(1, p + 1)]


def word_family(space: QuotientSpace, max_length: int = 4, cap: int = 400, max_power: int = 2,
                show_progress: bool = False) -> List[Tuple[Tuple[Generator, ...], QuotientVector]]:
    """
    Breadth-first search over divided-power words applied to v_c. Every vector is bar-fixed because v_c is and the
    divided powers are. Vectors seen before are skipped and the search stops after cap vectors.
    """
    start = cyclic_vector(space)
    family = [((), start)]
    seen = {start}
    frontier = [((), start)]
    gens = chevalley_generators(space.p, max_power)
    for _ in tqdm(range(max_length), disable=not show_progress, desc="word family"):
        next_frontier = []
        for word, vector in frontier:
            for gen in gens:
                image = space.act_chevalley(gen, vector)
                if image.is_zero() or image in seen or -image in seen:
                    continue
                seen.add(image)
                entry = ((gen,) + word, image)
                family.append(entry)
                next_frontier.append(entry)
                if len(family) >= cap:
                    logger.info(f"The word family reached its cap of {cap} vectors.")
                    return family
        frontier = next_frontier
        if not frontier:
            break
    return family


def weight_family(space: QuotientSpace, family: Sequence[Tuple[Tuple, QuotientVector]], mu_tilde: GlpWeight,
                  z_radius: int) -> List[QuotientVector]:
    """
    The family members of finite weight mu_tilde moved into X' by z_m, sum(m) = (delta degree), |m|_inf <= z_radius.
    """
    ell = len(space.block_ranges)
    members = []
    for _, vector in family:
        weight = space.vector_weight(vector)
        if weight.finite_part != mu_tilde.finite_part:
            continue
        for m in coset_vectors_with_sum(ell, z_radius, weight.delta):
            members.append(space.act_z(vector, m))
    return members


def coset_vectors_with_sum(ell: int, radius: int, total: int) -> List[Tuple[int, ...]]:
    if total == 0:
        return list(coset_vectors(ell, radius))
    return [tuple(m[:-1]) + (m[-1] + total,) for m in coset_vectors(ell, radius) if abs(m[-1] + total) <= radius]


def height_c(index: TensorBasisIndex, space: QuotientSpace) -> int:
    """
    The sum of the heights of the proper prefix sums of the factor weights. It is a linear extension of <=_c:
    t' <_c t implies height_c(t') > height_c(t).
    """
    weights = space.factor_weights(index)
    total, result = weights[0] - weights[0], 0
    for weight in weights[:-1]:
        total = total + weight
        result += total.height()
    return result


def iota_N_on_span(v: QuotientVector, basis: "TensorCanonicalBasis") -> QuotientVector:
    """
    iota_N(v) = sum_j bar(a_j) b_j for v = sum_j a_j b_j in the span of the bar-fixed family, computed exactly.

    Raises:
        SpanError: if v is not in the span of the family.
    """
    return basis.span.transport_bar(v)


# --- the canonical basis F(t) --- #
@dataclass
class TensorEntry:
    index: TensorBasisIndex
    vector: Optional[QuotientVector]
    verified: bool
    reason: Optional[str] = None

    def to_record(self) -> dict:
        return dict(
            index=self.index.to_record(),
            terms=[] if self.vector is None else self.vector.to_records(),
            verified=self.verified,
            reason=self.reason,
        )


@dataclass
class TensorCanonicalTable:
    mu_tilde: GlpWeight
    radius: int
    tri_direction: str
    entries: Dict[TensorBasisIndex, TensorEntry] = field(default_factory=dict)
    uncovered: List[TensorBasisIndex] = field(default_factory=list)
    # (lower, upper) pairs of the order read off iota_N
    edges: List[Tuple[TensorBasisIndex, TensorBasisIndex]] = field(default_factory=list)

    def __getitem__(self, index: TensorBasisIndex) -> Optional[QuotientVector]:
        return self.entries[index].vector

    def __contains__(self, index: TensorBasisIndex) -> bool:
        return index in self.entries

    def verified(self) -> List[TensorBasisIndex]:
        return [index for index in sorted(self.entries) if self.entries[index].verified]

    def to_records(self) -> List[dict]:
        return [self.entries[index].to_record() for index in sorted(self.entries)]


class TensorCanonicalBasis:
    """
    Computes F(t) for the window basis of one weight space.

    The word family spans a subspace S of the weight space. Its reduced echelon basis, with the keys sorted by
    height_c from the top, has one row e_t = t + (keys of larger height_c that lead no row) for every t that leads
    a vector of S. The family is bar-fixed, so iota_N maps S to itself and iota_N(e_t'') = sum_t' r_{t't''} e_t'
    exactly, with r_{t't''} read off the leading keys. F(t) = sum_t' p_{t't} e_t' then solves
    p_{t't} - bar(p_{t't}) = sum_{t' < t'' <= t} r_{t't''} bar(p_{t''t}) top down over the leading keys, with
    p_{t't} on the chosen side of the lattice: 'pos' keeps q Z[q], 'neg' keeps q^-1 Z[q^-1]. The remaining
    coefficients follow from the rows, and certify_tensor_entry() decides whether the result is F(t).
    """

    def __init__(self, space: QuotientSpace, mu_tilde: GlpWeight, radius: int,
                 tri_direction: str = DEFAULT_TRI_DIRECTION, family_word_length: int = 4, family_cap: int = 400,
                 max_power: int = 2, z_radius: int = None, closure_cap: int = 200, show_progress: bool = False):
        assert tri_direction in TRI_DIRECTIONS, \
            f"tri_direction must be one of {TRI_DIRECTIONS}, but got {tri_direction}!"
        self.space = space
        self.mu_tilde = mu_tilde
        self.radius = radius
        self.tri_direction = tri_direction
        self.closure_cap = closure_cap
        self.show_progress = show_progress
        z_radius = radius + family_word_length if z_radius is None else z_radius

        self._heights: Dict[TensorBasisIndex, int] = {}
        self._iota: Dict[TensorBasisIndex, Optional[QuotientVector]] = {}
        family = word_family(space, family_word_length, family_cap, max_power, show_progress)
        self.span = EchelonSpan(weight_family(space, family, mu_tilde, z_radius), order=self.order_key)
        logger.info(f"Bar-fixed family of weight {mu_tilde}: {len(self.span)} leading keys.")

    # --- the order --- #
    def height(self, index: TensorBasisIndex) -> int:
        if index not in self._heights:
            self._heights[index] = height_c(index, self.space)
        return self._heights[index]

    def order_key(self, index: TensorBasisIndex) -> tuple:
        """Top first: smaller height_c, then the index."""
        return self.height(index), index

    # --- iota_N --- #
    def iota(self, index: TensorBasisIndex) -> Optional[QuotientVector]:
        """
        iota_N(e_t) written in the rows: its coefficients at the leading keys, or None if t leads no row.

        Raises:
            ConventionError: if they are not 1 at t plus terms of larger height_c.
        """
        if index not in self._iota:
            self._iota[index] = None
            if index in self.span:
                image = QuotientVector({
                    key: from_field(value) for key, value in self.span.bar_row(index).items() if key in self.span
                })
                if image.coefficient(index) != ONE:
                    raise ConventionError(f"iota_N is not unitriangular: iota_N({index}) has coefficient "
                                          f"{image.coefficient(index)} at {index}!")
                above = [key for key in image.terms if key != index and self.height(key) <= self.height(index)]
                if above:
                    raise ConventionError(f"iota_N({index}) has the term {above[0]} that is not lower for height_c!")
                self._iota[index] = image
        return self._iota[index]

    # --- F(t) --- #
    def _part(self, s: LaurentScalar) -> LaurentScalar:
        return s.negative_part() if self.tri_direction == "neg" else s.positive_part()

    def _on_side(self, f: LaurentScalar) -> bool:
        return f.is_sub_unitriangular() if self.tri_direction == "neg" else f.is_super_unitriangular()

    def entry(self, index: TensorBasisIndex) -> TensorEntry:
        """F(t) from the top down; the entry is verified once certify_tensor_entry() accepts it."""
        if self.iota(index) is None:
            return TensorEntry(index=index, vector=None, verified=False,
                               reason="no vector of the family span is led by it")
        coefficients = {index: ONE}
        candidates: Set[TensorBasisIndex] = {key for key in self.iota(index).terms if key != index}
        reason = None
        while candidates:
            lower = min(candidates, key=self.order_key)
            candidates.discard(lower)
            s = LaurentScalar()
            for upper, p_upper in coefficients.items():
                r = self._iota[upper].coefficient(lower)
                if r:
                    s = s + r * p_upper.bar()
            if s.bar() != -s:
                raise ConventionError(f"The correction {s} at {lower} below {index} is not anti-symmetric!")
            p = self._part(s)
            if not p:
                continue
            coefficients[lower] = p
            if len(coefficients) > self.closure_cap:
                reason = f"more than {self.closure_cap} terms"
                break
            candidates.update(key for key in self.iota(lower).terms if key != lower)

        vector = None
        if reason is None:
            try:
                vector = QuotientVector({
                    key: from_field(value) for key, value in self.span.combine(coefficients).items()
                })
                certify_tensor_entry(index, vector, self)
            except ConventionError as e:
                logger.warning(f"F({index}) is not certified: {e}")
                reason = str(e)
        if vector is None:
            vector = QuotientVector(coefficients)
        return TensorEntry(index=index, vector=vector, verified=reason is None, reason=reason)

    def _edges(self, nodes: Sequence[TensorBasisIndex]) -> List[Tuple]:
        """The pairs (lower, upper) with lower in iota_N(upper), checked to form an acyclic relation."""
        node_set = set(nodes)
        edges = []
        for upper in nodes:
            known = self._iota.get(upper)
            if known is None:
                continue
            edges.extend((lower, upper) for lower in known.terms if lower != upper and lower in node_set)
        try:
            topological_sort((list(nodes), edges), key=lambda index: (index.coset, index.residues))
        except ValueError:
            cycles = [scc for scc in strongly_connected_components((list(nodes), edges)) if len(scc) > 1]
            raise ConventionError(f"The order read off iota_N has a cycle: {cycles[0][:4]}!")
        return edges

    def table(self) -> TensorCanonicalTable:
        basis = self.space.window_basis(self.mu_tilde, self.radius)
        table = TensorCanonicalTable(mu_tilde=self.mu_tilde, radius=self.radius, tri_direction=self.tri_direction)
        for index in tqdm(basis, disable=not self.show_progress, desc="F(t)"):
            table.entries[index] = self.entry(index)
            if self.iota(index) is None:
                table.uncovered.append(index)
        if table.uncovered:
            logger.warning(f"{len(table.uncovered)} of {len(basis)} basis vectors of weight {self.mu_tilde} lead no "
                           f"vector of the family span: {table.uncovered[:3]}")
        table.edges = self._edges(sorted(key for key, known in self._iota.items() if known is not None))
        return table


def certify_tensor_entry(index: TensorBasisIndex, vector: QuotientVector, basis: TensorCanonicalBasis):
    """
    The certificate of F(t): unit coefficient at t, every other term strictly below t for <=_c with a coefficient
    on the lattice side of basis, membership in the span of the family and iota_N(F(t)) = F(t), both exact.
    These determine F(t) uniquely.

    Raises:
        ConventionError: on the first violation.
    """
    space = basis.space
    if vector.coefficient(index) != ONE:
        raise ConventionError(f"F({index}) has coefficient {vector.coefficient(index)} at {index}!")
    for key, f in vector.terms.items():
        if key == index:
            continue
        if not less_c(key, index, space):
            raise ConventionError(f"F({index}) has the term {key} that is not below it for <=_c!")
        if not basis._on_side(f):
            raise ConventionError(f"F({index}) has the coefficient {f} at {key} on the wrong side of the lattice!")
    try:
        image = iota_N_on_span(vector, basis)
    except SpanError as e:
        raise ConventionError(f"F({index}) is not in the span of the bar-fixed family: {e}")
    if image != vector:
        raise ConventionError(f"F({index}) is not fixed by iota_N!")


def tensor_canonical_basis(data: HighestWeightData, mu_tilde: GlpWeight, win: Window,
                           tri_direction: str = DEFAULT_TRI_DIRECTION, **kwargs) -> TensorCanonicalTable:
    space = build_quotient(data, mu_tilde, win)
    return TensorCanonicalBasis(space, mu_tilde, win.radius, tri_direction, **kwargs).table()
