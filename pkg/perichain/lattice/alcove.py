"""
    Author: perichain contributors
    Date: 2026.10

    Alcoves of V' at level p, the I_c-slab S_c, the generic order and the translations g_gamma.

    An alcove is stored as its coordinate y in W', meaning A = A'_+ . y. Left multiplication of the coordinate is the
    left W'-action, right multiplication the right one. All geometric tests go through the exact interior point of A.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Tuple

from perichain import ConventionError
from perichain.lattice.rootdata import Composition, Weight, blocks, block_sums
from perichain.lattice.weyl import (
    AffineWeylElt,
    Permutation,
    all_perms,
    base_point,
    compose,
    compose_perm,
    finite,
    floor_vector,
    identity,
    invert_perm,
    is_min_left_coset,
    level_p_action,
    min_left_reps,
    permute_weight,
    simple,
    transposition,
)


@dataclass(frozen=True, order=True)
class Alcove:
    """A'_+ . coord for coord in W'."""
    coord: AffineWeylElt

    def __post_init__(self):
        assert self.coord.is_in_W_prime(), f"Alcoves are indexed by W', but {self.coord} has a non-zero pi-power!"

    @property
    def d(self) -> int:
        return self.coord.d

    def to_record(self) -> dict:
        return self.coord.to_record()


def base_alcove(d: int) -> Alcove:
    """A'_+."""
    return Alcove(identity(d))


def alcove_of(perm: Permutation) -> Alcove:
    """A'_+ . w for a finite permutation w."""
    return Alcove(finite(perm))


def interior_point(A: Alcove, p: int) -> Tuple[Fraction, ...]:
    """An exact rational point of the open alcove A; its pairings with the coroots avoid pZ."""
    return level_p_action(base_point(A.d, p), A.coord, p)


def left_act(i: int, A: Alcove) -> Alcove:
    """s_i . A = A'_+ . (s_i y)."""
    return Alcove(compose(simple(i, A.d), A.coord))


def right_act(A: Alcove, y: AffineWeylElt) -> Alcove:
    return Alcove(compose(A.coord, y))


# --- the slab S_c --- #
def in_A_c(A: Alcove, c: Composition, p: int = 1) -> bool:
    """
    A lies in S_c iff for every positive root in the span of I_c the interior point lies in the same p-slab as
    the point of A'_+, i.e. 0 < pt_j - pt_k < p for j < k inside one block of c.
    """
    pt = interior_point(A, p)
    for start, stop in blocks(c):
        for j, k in itertools.combinations(range(start, stop), 2):
            if not 0 < pt[j] - pt[k] < p:
                return False
    return True


# --- generic order --- #
def floors(A: Alcove) -> Tuple[int, ...]:
    """For each positive root eps_j - eps_k (j < k): the index n of the slab np < (pt:alpha^v) < (n+1)p."""
    return floor_vector(A.coord, 1)


def height(A: Alcove) -> int:
    """Sum of the slab indices; strictly increasing along every positive wall crossing."""
    return sum(floors(A))


def reflection(j: int, k: int, m: int, d: int) -> AffineWeylElt:
    """Right multiplication by this element reflects a level-1 point in the wall (pt_j - pt_k) = m."""
    lam = [0] * d
    lam[j], lam[k] = -m, m
    return AffineWeylElt(transposition(j, k, d), tuple(lam))


def _prefix_gaps(A: Alcove, B: Alcove) -> Tuple[Fraction, ...]:
    """Partial sums of pt_B - pt_A; A <= B forces all of them to be non-negative."""
    return tuple(itertools.accumulate(b - a for a, b in zip(interior_point(A, 1), interior_point(B, 1))))[:-1]


def _raises(C: Alcove, gaps: Tuple[Fraction, ...]) -> Iterator[Alcove]:
    """Reflections of C in walls it lies below that keep the partial sums of pt_B - pt non-negative."""
    pt = interior_point(C, 1)
    for j, k in itertools.combinations(range(C.d), 2):
        a = pt[j] - pt[k]
        room = min(gaps[j:k])
        for m in range(math.floor(a) + 1, math.floor(a + room) + 1):
            yield Alcove(compose(C.coord, reflection(j, k, m, C.d)))


@lru_cache(maxsize=None)
def generic_leq(A: Alcove, B: Alcove) -> bool:
    """
    A <= B in the generic order, generated by A < s_H A whenever A lies on the negative side of the affine wall H.
    Crossing the walls of a gallery one at a time gives the sufficient test floors(A) <= floors(B); the partial sums
    of pt_B - pt_A being non-negative is necessary. Between the two the reflections are searched, every step
    shrinking those partial sums.
    """
    assert A.d == B.d, "Alcoves of different ranks cannot be compared!"
    top = floors(B)
    seen, frontier = {A}, [A]
    while frontier:
        C = frontier.pop()
        if all(c <= b for c, b in zip(floors(C), top)):
            return True
        gaps = _prefix_gaps(C, B)
        if min(gaps, default=0) < 0:
            continue
        for D in _raises(C, gaps):
            if D not in seen:
                seen.add(D)
                frontier.append(D)
    return False


def generic_less(A: Alcove, B: Alcove) -> bool:
    return A != B and generic_leq(A, B)


def sort_key(A: Alcove) -> tuple:
    """A total order refining the generic order: height first, then the coordinate."""
    return height(A), A.coord


# --- the translations g_gamma --- #
@lru_cache(maxsize=None)
def block_shift(n: int, k: int) -> Tuple[Permutation, Tuple[int, ...]]:
    """
    For a block of size k and block sum n = k r + s (0 <= s < k): the rotation sigma with sigma(i) = i + k - s for
    i < s and sigma(i) = i - s otherwise, and the vector m = ((r+1)^s, r^(k-s)).
    """
    r, s = divmod(n, k)
    sigma = tuple(i + k - s if i < s else i - s for i in range(k))
    m = tuple(r + 1 if i < s else r for i in range(k))
    return sigma, m


def coset_shift(n: Tuple[int, ...], c: Composition) -> Tuple[Permutation, Weight]:
    """Block-diagonal sigma and the vector m for the coset with block sums n."""
    ranges = blocks(c)
    assert len(n) == len(ranges), f"The coset {n} does not match the blocks of {c}!"
    sigma, m = [], []
    for (start, stop), block_sum in zip(ranges, n):
        local_sigma, local_m = block_shift(block_sum, stop - start)
        sigma.extend(start + i for i in local_sigma)
        m.extend(local_m)
    return tuple(sigma), tuple(m)


def coset_element(n: Tuple[int, ...], c: Composition) -> AffineWeylElt:
    """The element z_n = (sigma^-1, m[sigma^-1]) with g_n(A'_+ y) = A'_+ . y . z_n."""
    sigma, m = coset_shift(n, c)
    sigma_inv = invert_perm(sigma)
    return AffineWeylElt(sigma_inv, permute_weight(m, sigma_inv))


def g_coset(A: Alcove, n: Tuple[int, ...], c: Composition) -> Alcove:
    """g_gamma(A) for any gamma with block sums n; defined on all of A_c."""
    assert sum(n) == 0, f"g_gamma needs gamma in Q, but the block sums {n} do not add up to zero!"
    return right_act(A, coset_element(tuple(n), c))


def g_gamma(A: Alcove, gamma: Weight, c: Composition) -> Alcove:
    """g_gamma(A) = (A - p gamma) . w_gamma^-1."""
    assert sum(gamma) == 0, f"g_gamma needs gamma in Q, but got {gamma}!"
    return g_coset(A, block_sums(gamma, c), c)


def w_gamma(gamma: Weight, c: Composition) -> AffineWeylElt:
    """The unique element of W'_c = W_c x Z I_c with S_c - p gamma = S_c . w_gamma."""
    assert sum(gamma) == 0, f"w_gamma needs gamma in Q, but got {gamma}!"
    sigma, m = coset_shift(block_sums(gamma, c), c)
    return AffineWeylElt(sigma, tuple(g - x for g, x in zip(gamma, m)))


def decompose(A: Alcove, c: Composition) -> Tuple[Permutation, Tuple[int, ...]]:
    """
    The unique (w, n) with w in W^c and A = g_n(A'_+ . w).

    Raises:
        ConventionError: if A does not lie in A_c.
    """
    y = A.coord
    n = block_sums(y.trans, c)
    sigma, m = coset_shift(n, c)
    if permute_weight(m, invert_perm(sigma)) != y.trans:
        raise ConventionError(f"{A} is not of the form g_n(A'_+ . w): translation {y.trans} is not a coset shift!")
    w = compose_perm(y.perm, sigma)
    if not is_min_left_coset(w, c):
        raise ConventionError(f"{A} decomposes with w={w}, which is not a minimal coset representative for {c}!")
    return w, n


def compose_alcove(w: Permutation, n: Tuple[int, ...], c: Composition) -> Alcove:
    """Inverse of decompose."""
    return g_coset(alcove_of(w), n, c)


# --- windows --- #
@dataclass(frozen=True)
class Window:
    """All alcoves g_n(A'_+ . w) of A_c with w in W^c and |n|_inf <= radius."""
    radius: int

    def cosets(self, c: Composition) -> List[Tuple[int, ...]]:
        ell = len(blocks(c))
        box = range(-self.radius, self.radius + 1)
        return [n for n in itertools.product(box, repeat=ell) if sum(n) == 0]

    def alcoves(self, c: Composition) -> List[Alcove]:
        result = [compose_alcove(w, n, c) for n in self.cosets(c) for w in min_left_reps(tuple(c))]
        return sorted(result, key=sort_key)

    def contains(self, A: Alcove, c: Composition) -> bool:
        _, n = decompose(A, c)
        return max((abs(x) for x in n), default=0) <= self.radius


def enumerate_W_prime(d: int, radius: int) -> Iterator[AffineWeylElt]:
    """All (w, lam) in W' with |lam|_inf <= radius."""
    box = range(-radius, radius + 1)
    for lam in itertools.product(box, repeat=d):
        if sum(lam) != 0:
            continue
        for w in all_perms(d):
            yield AffineWeylElt(w, tuple(lam))


def coset_vectors(ell: int, radius: int) -> Iterator[Tuple[int, ...]]:
    """Zero-sum integer vectors of length ell with entries bounded by radius."""
    for n in itertools.product(range(-radius, radius + 1), repeat=ell):
        if sum(n) == 0:
            yield n
