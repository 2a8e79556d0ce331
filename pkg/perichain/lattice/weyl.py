"""
    Author: perichain contributors
    Date: 2026.10

    The finite, affine and extended affine Weyl groups of GL_d.

    A finite element is a 0-based one-line permutation w; it acts on weights from the right by
    gamma[w]_j = gamma_{w(j)} and sends eps_j to eps_{w(j)}. An element (w, lam) of the extended affine Weyl group W
    stands for w * tau_lam and acts on X at level p by gamma . (w, lam) = gamma[w] - p * lam.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Sequence, Tuple

from perichain import ConventionError
from perichain.lattice.rootdata import (
    Composition,
    HighestWeightData,
    Weight,
    blocks,
    parabolic_simples,
    residue,
    theta,
)

Permutation = Tuple[int, ...]


# --- finite permutations --- #
def identity_perm(d: int) -> Permutation:
    return tuple(range(d))


def compose_perm(a: Permutation, b: Permutation) -> Permutation:
    """(a o b)(j) = a(b(j))."""
    assert len(a) == len(b), f"Dimension mismatch between {a} and {b}!"
    return tuple(a[b[j]] for j in range(len(b)))


def invert_perm(a: Permutation) -> Permutation:
    inverse = [0] * len(a)
    for j, image in enumerate(a):
        inverse[image] = j
    return tuple(inverse)


def transposition(i: int, j: int, d: int) -> Permutation:
    perm = list(range(d))
    perm[i], perm[j] = perm[j], perm[i]
    return tuple(perm)


def simple_perm(i: int, d: int) -> Permutation:
    """s_i for 1 <= i < d, swapping the 0-based positions i-1 and i."""
    assert 1 <= i < d, f"s_{i} is not a finite simple reflection for d={d}!"
    return transposition(i - 1, i, d)


def inversions(perm: Permutation) -> int:
    return sum(1 for j, k in itertools.combinations(range(len(perm)), 2) if perm[j] > perm[k])


def permute_weight(gamma: Sequence, perm: Permutation) -> tuple:
    """gamma[w]_j = gamma_{w(j)}."""
    assert len(gamma) == len(perm), f"Dimension mismatch between {gamma} and {perm}!"
    return tuple(gamma[perm[j]] for j in range(len(perm)))


@lru_cache(maxsize=None)
def all_perms(d: int) -> Tuple[Permutation, ...]:
    return tuple(sorted(itertools.permutations(range(d)), key=lambda w: (inversions(w), w)))


# --- extended affine Weyl group --- #
@dataclass(frozen=True, order=True)
class AffineWeylElt:
    """
    w * tau_lam with w a 0-based one-line permutation and lam an integer weight.
    The element lies in W' iff sum(lam) = 0; sum(lam) is its pi-power.
    """
    perm: Permutation
    trans: Weight

    def __post_init__(self):
        assert len(self.perm) == len(self.trans), f"Dimension mismatch between {self.perm} and {self.trans}!"

    @property
    def d(self) -> int:
        return len(self.perm)

    @property
    def pi_power(self) -> int:
        return sum(self.trans)

    def is_in_W_prime(self) -> bool:
        return self.pi_power == 0

    def is_finite(self) -> bool:
        return all(x == 0 for x in self.trans)

    def __mul__(self, other: "AffineWeylElt") -> "AffineWeylElt":
        return compose(self, other)

    def inverse(self) -> "AffineWeylElt":
        return invert(self)

    def to_record(self) -> dict:
        """(one-line permutation 1-based, translation vector, pi-power)."""
        return {"perm": [j + 1 for j in self.perm], "trans": list(self.trans), "pi_power": self.pi_power}


def compose(x: AffineWeylElt, y: AffineWeylElt) -> AffineWeylElt:
    """(w1, l1)(w2, l2) = (w1 o w2, l1[w2] + l2)."""
    assert x.d == y.d, f"Cannot compose elements for d={x.d} and d={y.d}!"
    shifted = permute_weight(x.trans, y.perm)
    return AffineWeylElt(compose_perm(x.perm, y.perm), tuple(a + b for a, b in zip(shifted, y.trans)))


def invert(x: AffineWeylElt) -> AffineWeylElt:
    """(w, l)^-1 = (w^-1, -l[w^-1])."""
    winv = invert_perm(x.perm)
    return AffineWeylElt(winv, tuple(-a for a in permute_weight(x.trans, winv)))


def identity(d: int) -> AffineWeylElt:
    return AffineWeylElt(identity_perm(d), tuple([0] * d))


def finite(perm: Permutation) -> AffineWeylElt:
    return AffineWeylElt(tuple(perm), tuple([0] * len(perm)))


def translation(lam: Weight) -> AffineWeylElt:
    return AffineWeylElt(identity_perm(len(lam)), tuple(lam))


def simple(i: int, d: int) -> AffineWeylElt:
    """s_1, ..., s_{d-1} are finite; s_d = tau_theta s_{theta^v} = (s_theta, -theta)."""
    assert 1 <= i <= d, f"s_{i} does not exist for d={d}!"
    if i < d:
        return finite(simple_perm(i, d))
    return AffineWeylElt(transposition(0, d - 1, d), tuple(-x for x in theta(d)))


def pi_elt(d: int) -> AffineWeylElt:
    """
    pi = tau_{omega_1} s_1 s_2 ... s_{d-1}, the length-zero generator:
    gamma . pi = (gamma_2, ..., gamma_d, gamma_1 - p).
    """
    rotation = tuple((j + 1) % d for j in range(d))
    return AffineWeylElt(rotation, tuple(1 if j == d - 1 else 0 for j in range(d)))


def pi_power_elt(k: int, d: int) -> AffineWeylElt:
    base = pi_elt(d) if k >= 0 else invert(pi_elt(d))
    result = identity(d)
    for _ in range(abs(k)):
        result = compose(result, base)
    return result


def level_p_action(gamma: Sequence, x: AffineWeylElt, p: int) -> tuple:
    """gamma . (w, lam) = gamma[w] - p lam. Works on integer and Fraction vectors alike."""
    return tuple(g - p * t for g, t in zip(permute_weight(gamma, x.perm), x.trans))


# --- lengths and reduced words --- #
@lru_cache(maxsize=None)
def base_point(d: int, p: int) -> Tuple[Fraction, ...]:
    """A rational point in the open fundamental alcove A'_+: consecutive differences p/d, zero sum."""
    return tuple(Fraction(p * (2 * (d - j) - 1), 2 * d) - Fraction(p, 2) for j in range(d))


@lru_cache(maxsize=None)
def floor_vector(x: AffineWeylElt, p: int) -> Tuple[int, ...]:
    """
    floor((pt_j - pt_k) / p) for j < k, where pt is the base point moved by x. Records for each positive root
    the slab of the alcove A_+ . x; the vector is the same for every p.
    """
    pt = level_p_action(base_point(x.d, p), x, p)
    return tuple(
        (pt[j] - pt[k]) // p for j, k in itertools.combinations(range(x.d), 2)
    )


@lru_cache(maxsize=None)
def length(x: AffineWeylElt) -> int:
    """Number of affine hyperplanes separating A_+ from A_+ . x; pi has length zero."""
    return sum(abs(n) for n in floor_vector(x, 1))


@lru_cache(maxsize=None)
def reduced_word(x: AffineWeylElt) -> Tuple[Tuple[int, ...], int]:
    """
    A reduced word of x as (generator indices [i_1, ..., i_r], k) with x = pi^k s_{i_1} ... s_{i_r}.
    """
    d = x.d
    word, current = [], x
    remaining = length(current)
    while remaining > 0:
        for i in range(1, d + 1):
            candidate = compose(current, simple(i, d))
            candidate_length = length(candidate)
            if candidate_length < remaining:
                word.insert(0, i)
                current, remaining = candidate, candidate_length
                break
        else:
            raise ConventionError(f"No right descent found for {current} of length {remaining}!")
    k = current.pi_power
    if current != pi_power_elt(k, d):
        raise ConventionError(f"The length-zero element {current} is not a power of pi!")
    return tuple(word), k


def from_word(word: Sequence[int], k: int, d: int) -> AffineWeylElt:
    result = pi_power_elt(k, d)
    for i in word:
        result = compose(result, simple(i, d))
    return result


# --- parabolic subgroups and cosets --- #
def is_min_left_coset(perm: Permutation, f: Composition) -> bool:
    """w in W^f, i.e. minimal in w W_f: w(alpha_i) > 0 for all i in I_f."""
    return all(perm[i - 1] < perm[i] for i in parabolic_simples(tuple(f)))


def is_min_right_coset(perm: Permutation, f: Composition) -> bool:
    """w in ^fW, i.e. minimal in W_f w."""
    return is_min_left_coset(invert_perm(perm), f)


def coset_reps(f: Composition) -> Tuple[Callable[[Permutation], bool], Callable[[Permutation], bool]]:
    """Membership tests for W^f and ^fW."""
    f = tuple(f)
    return (lambda w: is_min_left_coset(w, f)), (lambda w: is_min_right_coset(w, f))


@lru_cache(maxsize=None)
def min_left_reps(f: Composition) -> Tuple[Permutation, ...]:
    return tuple(w for w in all_perms(sum(f)) if is_min_left_coset(w, f))


@lru_cache(maxsize=None)
def min_right_reps(f: Composition) -> Tuple[Permutation, ...]:
    return tuple(w for w in all_perms(sum(f)) if is_min_right_coset(w, f))


@lru_cache(maxsize=None)
def parabolic_subgroup(f: Composition) -> Tuple[Permutation, ...]:
    """W_f: the permutations preserving every block of f."""
    d = sum(f)
    ranges = blocks(f)

    def preserves(w: Permutation) -> bool:
        return all(start <= w[j] < stop for start, stop in ranges for j in range(start, stop))

    return tuple(w for w in all_perms(d) if preserves(w))


def longest_element(f: Composition) -> Permutation:
    """w_f: reverses every block of f."""
    perm = []
    for start, stop in blocks(f):
        perm.extend(range(stop - 1, start - 1, -1))
    return tuple(perm)


@lru_cache(maxsize=None)
def sigma_c(data: HighestWeightData) -> Permutation:
    """
    The unique w in W^c that is the longest element of its coset W_d w.

    Raises:
        ConventionError: if the enumeration finds no candidate or more than one.
    """
    simples_d = parabolic_simples(data.d_comp)
    candidates = []
    for w in min_left_reps(data.c):
        ell_w = inversions(w)
        if all(inversions(compose_perm(simple_perm(i, data.d), w)) < ell_w for i in simples_d):
            candidates.append(w)
    if len(candidates) != 1:
        raise ConventionError(
            f"Expected exactly one element in ^dW^c for c={data.c}, d={data.d_comp}, but found {candidates}!"
        )
    return candidates[0]


def sigma_min(data: HighestWeightData) -> Permutation:
    """w_d sigma_c: the minimal element of W_d sigma_c, again in W^c."""
    return compose_perm(longest_element(data.d_comp), sigma_c(data))


# --- fundamental domain of the level-p action --- #
def fundamental_domain(gamma: Weight, p: int) -> Tuple[Weight, AffineWeylElt]:
    """
    gamma = mu . y with mu in closure(A_+) cap X_p and y = (w, kappa) where w is minimal in W_e w (w in ^eW).
    """
    d = len(gamma)
    residues = tuple(residue(g, p) for g in gamma)
    kappa = tuple((r - g) // p for r, g in zip(residues, gamma))
    mu = tuple(sorted(residues, reverse=True))
    # equal residues fill their block of mu from left to right
    next_slot = {}
    for slot, value in enumerate(mu):
        next_slot.setdefault(value, slot)
    perm = []
    for r in residues:
        perm.append(next_slot[r])
        next_slot[r] += 1
    y = AffineWeylElt(tuple(perm), kappa)
    assert level_p_action(mu, y, p) == tuple(gamma)
    assert len(perm) == d
    return mu, y
