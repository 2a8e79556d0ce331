"""
    Author: perichain contributors
    Date: 2026.10

    Root data of GL_d and the gl_p weight bookkeeping.

    Weights of GL_d are integer tuples in the basis eps_1..eps_d. The coroot lattice is identified with the same
    tuples, so the pairing ( : ) is the dot product. Compositions are tuples of non-negative integers.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

from perichain.algebra.laurent import LaurentScalar, ONE, q_power

Weight = Tuple[int, ...]
Composition = Tuple[int, ...]


# --- GL_d lattice --- #
def omega(i: int, d: int) -> Weight:
    """The fundamental weight omega_i = eps_1 + ... + eps_i."""
    assert 0 <= i <= d, f"omega_{i} does not exist for d={d}!"
    return tuple(1 if j < i else 0 for j in range(d))


def alpha(i: int, d: int) -> Weight:
    """The simple root alpha_i = eps_i - eps_{i+1} for 1 <= i < d. Simple coroots have the same coordinates."""
    assert 1 <= i < d, f"alpha_{i} does not exist for d={d}!"
    return tuple(1 if j == i - 1 else -1 if j == i else 0 for j in range(d))


def theta(d: int) -> Weight:
    """The highest root eps_1 - eps_d, equal to theta^v under the identification."""
    assert d >= 2, "theta needs d >= 2!"
    return tuple(1 if j == 0 else -1 if j == d - 1 else 0 for j in range(d))


def add(gamma: Weight, other: Weight) -> Weight:
    assert len(gamma) == len(other), f"Dimension mismatch between {gamma} and {other}!"
    return tuple(a + b for a, b in zip(gamma, other))


def sub(gamma: Weight, other: Weight) -> Weight:
    assert len(gamma) == len(other), f"Dimension mismatch between {gamma} and {other}!"
    return tuple(a - b for a, b in zip(gamma, other))


def scale(gamma: Weight, factor: int) -> Weight:
    return tuple(factor * a for a in gamma)


def pairing(gamma: Weight, coweight: Weight) -> int:
    """The canonical pairing X x X^v -> Z with (eps_i : eps_j^v) = delta_ij."""
    assert len(gamma) == len(coweight), f"Dimension mismatch between {gamma} and {coweight}!"
    return sum(a * b for a, b in zip(gamma, coweight))


def dominance_leq(mu: Weight, nu: Weight) -> bool:
    """mu <= nu iff nu - mu is a non-negative combination of simple roots."""
    diff = sub(nu, mu)
    partial = 0
    for k in range(len(diff) - 1):
        partial += diff[k]
        if partial < 0:
            return False
    return sum(diff) == 0


# --- compositions and partitions --- #
def check_composition(f: Composition, d: int = None) -> Composition:
    f = tuple(int(x) for x in f)
    assert all(x >= 0 for x in f), f"A composition has non-negative parts, but got {f}!"
    if d is not None:
        assert sum(f) == d, f"The composition {f} does not sum to d={d}!"
    return f


def is_partition(c: Composition) -> bool:
    return all(c[i] >= c[i + 1] for i in range(len(c) - 1)) and all(x > 0 for x in c)


def partial_sums(f: Composition) -> List[int]:
    sums, total = [], 0
    for x in f:
        total += x
        sums.append(total)
    return sums


def blocks(f: Composition) -> List[Tuple[int, int]]:
    """0-based half-open position ranges of the non-empty blocks of f."""
    ranges, start = [], 0
    for x in f:
        if x > 0:
            ranges.append((start, start + x))
        start += x
    return ranges


@lru_cache(maxsize=None)
def parabolic_simples(f: Composition) -> frozenset:
    """I_f: the simple indices 1..d-1 that avoid every partial sum of f."""
    d = sum(f)
    excluded = set(partial_sums(f))
    return frozenset(i for i in range(1, d) if i not in excluded)


def compositions(total: int, parts: int) -> Iterator[Composition]:
    """All weak compositions of total into the given number of parts, in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def partitions(d: int, max_part: int = None) -> Iterator[Composition]:
    """All partitions of d with parts bounded by max_part, in reverse lexicographic order."""
    max_part = d if max_part is None else min(max_part, d)
    if d == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


# --- gl_p weights --- #
@dataclass(frozen=True)
class GlpWeight:
    """
    Weight of the quantum loop algebra of gl_p: finite part in the basis eps_1..eps_p plus a delta coordinate.
    """
    finite_part: Tuple[int, ...]
    delta: int = 0

    @property
    def p(self) -> int:
        return len(self.finite_part)

    def __add__(self, other: "GlpWeight") -> "GlpWeight":
        assert self.p == other.p, "gl_p weights of different ranks cannot be added!"
        return GlpWeight(add(self.finite_part, other.finite_part), self.delta + other.delta)

    def __sub__(self, other: "GlpWeight") -> "GlpWeight":
        assert self.p == other.p, "gl_p weights of different ranks cannot be subtracted!"
        return GlpWeight(sub(self.finite_part, other.finite_part), self.delta - other.delta)

    def __neg__(self) -> "GlpWeight":
        return GlpWeight(scale(self.finite_part, -1), -self.delta)

    def is_zero(self) -> bool:
        return self.delta == 0 and all(a == 0 for a in self.finite_part)

    def finite(self) -> "GlpWeight":
        return GlpWeight(self.finite_part, 0)

    def is_small(self) -> bool:
        return all(a in (0, 1) for a in self.finite_part)

    def in_positive_cone(self) -> bool:
        """
        Membership in Q^a_+ = sum_a N beta_a with beta_a = eps_a - eps_{a+1} (a < p) and
        beta_p = eps_p - eps_1 + delta. The coefficient of beta_p is the delta coordinate, and the
        remaining coefficients are the partial sums of the corrected finite part.
        """
        if sum(self.finite_part) != 0 or self.delta < 0:
            return False
        corrected = list(self.finite_part)
        corrected[-1] -= self.delta
        corrected[0] += self.delta
        partial = 0
        for a in range(self.p - 1):
            partial += corrected[a]
            if partial < 0:
                return False
        return True

    def height(self) -> int:
        """The linear form equal to 1 on every beta_a, so it is positive on Q^a_+ minus zero."""
        return self.p * self.delta - sum((a + 1) * x for a, x in enumerate(self.finite_part))

    def __repr__(self):
        text = " + ".join(f"{c}e{a + 1}" for a, c in enumerate(self.finite_part) if c != 0) or "0"
        return text if self.delta == 0 else f"{text} + {self.delta}delta"


def epsilon(a: int, p: int) -> GlpWeight:
    return GlpWeight(tuple(1 if b == a - 1 else 0 for b in range(p)), 0)


def delta_weight(p: int) -> GlpWeight:
    return GlpWeight(tuple(0 for _ in range(p)), 1)


def beta(a: int, p: int) -> GlpWeight:
    """Simple root beta_a of the affine gl_p root datum."""
    assert 1 <= a <= p, f"beta_{a} does not exist for p={p}!"
    if a < p:
        return epsilon(a, p) - epsilon(a + 1, p)
    return epsilon(p, p) - epsilon(1, p) + delta_weight(p)


def residue(m: int, p: int) -> int:
    """The representative of m mod p in 1..p."""
    return (m - 1) % p + 1


def level(m: int, p: int) -> int:
    """The l with m = residue(m) - p l."""
    return (residue(m, p) - m) // p


def weight_tilde(mu: Weight, p: int) -> Tuple[GlpWeight, Composition]:
    """
    mu -> mu~ = sum_a e_a eps_a with e_a = #{i : mu_i = a}. The composition e is returned as (e_p, ..., e_1).
    """
    assert all(0 < m <= p for m in mu), f"Every entry of {mu} must lie in (0, {p}]!"
    counts = tuple(sum(1 for m in mu if m == a) for a in range(1, p + 1))
    return GlpWeight(counts, 0), tuple(reversed(counts))


def dominant_from_tilde(mu_tilde: GlpWeight) -> Weight:
    """The unique mu in closure(A_+) cap X_p with the given mu~: entries p down to 1 with multiplicities e_a."""
    entries = []
    for a in range(mu_tilde.p, 0, -1):
        entries.extend([a] * mu_tilde.finite_part[a - 1])
    return tuple(entries)


def omega_set(d: int, p: int) -> List[GlpWeight]:
    """Omega: all sum e_a eps_a with e_a >= 0 and sum e_a = d."""
    return [GlpWeight(e, 0) for e in compositions(d, p)]


def omega_small(d: int, p: int) -> List[GlpWeight]:
    return [w for w in omega_set(d, p) if w.is_small()]


def in_X_prime(gamma: Weight, p: int) -> bool:
    """gamma lies in (closure(A_+) cap X_p) . W' iff its entry sum equals the sum of its residues."""
    return sum(gamma) == sum(residue(g, p) for g in gamma)


# --- the rings R_c and the map psi --- #
def alpha_c(c: Composition) -> Weight:
    """alpha_c = sum_i alpha(c_i) with alpha(c_i) = sum_k (c_i + 1 - 2k) eps_{c_1 + ... + c_{i-1} + k}."""
    entries = []
    for part in c:
        entries.extend(part + 1 - 2 * k for k in range(1, part + 1))
    return tuple(entries)


def block_sums(gamma: Weight, c: Composition) -> Tuple[int, ...]:
    """Coordinates of gamma + Z I_c in X / Z I_c."""
    assert len(gamma) == sum(c), f"{gamma} does not fit the composition {c}!"
    return tuple(sum(gamma[start:stop]) for start, stop in blocks(c))


@dataclass(frozen=True)
class RcMonomial:
    """scale * x_{gamma + Z I_c}, stored by the block-sum coordinates of gamma."""
    coset: Tuple[int, ...]
    scale: LaurentScalar = ONE

    def __post_init__(self):
        assert self.scale, "An R_c monomial must have a non-zero scale!"

    def __mul__(self, other: "RcMonomial") -> "RcMonomial":
        return RcMonomial(add(self.coset, other.coset), self.scale * other.scale)


def psi_monomial(gamma: Weight, c: Composition) -> RcMonomial:
    """psi(x_gamma) = q^{(gamma : alpha_c)} x_{gamma + Z I_c}."""
    return RcMonomial(block_sums(gamma, c), q_power(pairing(gamma, alpha_c(c))))


def coset_sign_exponent(coset: Tuple[int, ...], c: Composition) -> int:
    """
    Parity representative of (gamma : alpha_c) for any gamma in the coset: sum_b n_b (c_b - 1).
    The pairing itself depends on the representative, its parity does not.
    """
    parts = [x for x in c if x > 0]
    return sum(n * (k - 1) for n, k in zip(coset, parts))


# --- highest weight data --- #
@dataclass(frozen=True)
class HighestWeightData:
    """
    The tuple (lambda~, c, d, ell, ell_a) attached to a partition c of d with c_1 <= p.

    Attributes:
        lambda_tilde: coefficients of lambda~ = sum_j d_j eps_j over eps_1..eps_p
        d_comp: the composition (d_p, ..., d_1)
        ell_a: ell_a[a-1] = #{i : c_i = a}
    """
    p: int
    d: int
    c: Composition
    lambda_tilde: Tuple[int, ...]
    d_comp: Composition
    ell: int
    ell_a: Tuple[int, ...]

    @property
    def d_seq(self) -> Tuple[int, ...]:
        """(d_1, ..., d_p)."""
        return tuple(reversed(self.d_comp))

    @property
    def lambda_tilde_weight(self) -> GlpWeight:
        return GlpWeight(self.lambda_tilde, 0)

    @property
    def dominant_lambda(self) -> Weight:
        """lambda = (p^{d_p}, ..., 1^{d_1}) in closure(A_+) cap X_p, the preimage of lambda~."""
        return dominant_from_tilde(self.lambda_tilde_weight)

    @property
    def cyclic_pattern(self) -> Weight:
        """The pure tensor of the cyclic vector: concatenation of (c_i, c_i - 1, ..., 1) over the blocks of c."""
        entries = []
        for part in self.c:
            entries.extend(range(part, 0, -1))
        return tuple(entries)

    @property
    def nu_d(self) -> int:
        """Length of the longest element of W_d."""
        return sum(x * (x - 1) // 2 for x in self.d_comp)


def dual_data(p: int, c: Composition) -> HighestWeightData:
    c = check_composition(c)
    assert is_partition(c), f"{c} is not a partition (weakly decreasing positive parts)!"
    assert c[0] <= p, f"The largest part {c[0]} of {c} exceeds p={p}!"
    d = sum(c)
    d_seq = tuple(sum(1 for part in c if part >= j) for j in range(1, p + 1))
    ell_a = tuple(sum(1 for part in c if part == a) for a in range(1, p + 1))
    return HighestWeightData(
        p=p, d=d, c=c, lambda_tilde=d_seq, d_comp=tuple(reversed(d_seq)), ell=len(c), ell_a=ell_a
    )


def data_from_d(p: int, d_seq: Tuple[int, ...]) -> HighestWeightData:
    """The dual construction from (d_1, ..., d_p) with d_1 >= ... >= d_p >= 0."""
    d_seq = check_composition(d_seq)
    assert len(d_seq) == p, f"Expected {p} entries, but got {d_seq}!"
    assert all(d_seq[j] >= d_seq[j + 1] for j in range(p - 1)), f"{d_seq} is not weakly decreasing!"
    c = tuple(x for x in (sum(1 for dj in d_seq if dj >= i) for i in range(1, max(d_seq, default=0) + 1)))
    return dual_data(p, c)


def parse_weight(text: str) -> Weight:
    """Weights are written as comma-separated integers."""
    return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
