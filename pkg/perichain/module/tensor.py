"""
    Author: perichain contributors
    Date: 2026.10

    The tensor power V^{(x)d} of the vectorial representation of the quantum loop algebra of gl_p. U acts on the left
    through the iterated coproduct, the affine Hecke algebra H acts on the right through the Bernstein relations and
    the two actions commute.

    A basis vector u_gamma = u_{gamma_1} (x) ... (x) u_{gamma_d} is keyed by the integer tuple gamma. Every entry
    is written m = r - p l with a residue 1 <= r <= p and a level l, so that u_m = u_r . z^l.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from perichain.algebra.hecke import HeckeElt, monomial_x, t
from perichain.algebra.laurent import LaurentScalar, ONE, QDIFF, neg_q_power, q_factorial, q_power
from perichain.lattice.rootdata import (
    Composition,
    GlpWeight,
    Weight,
    blocks,
    check_composition,
    level,
    residue,
    weight_tilde,
)
from perichain.lattice.weyl import finite, fundamental_domain, reduced_word
from perichain.module.abs import SparseVector
from perichain.utilbox.regex_util import regex_generator


class TensorVector(SparseVector):
    """A finitely supported function Z^d -> Z[q, q^-1] over the basis {u_gamma}."""

    @staticmethod
    def key_record(key: Weight):
        return list(key)

    @property
    def d(self) -> int:
        assert not self.is_zero(), "The zero vector does not know its number of factors!"
        return len(next(iter(self.terms)))


def pure_tensor(gamma: Sequence[int], coef=ONE) -> TensorVector:
    return TensorVector.basis(tuple(gamma), coef)


# --- Chevalley generators --- #
@dataclass(frozen=True)
class Generator:
    """
    One Chevalley generator of U: kind in {'e', 'f'} with a divided power, or kind in {'l', 'k'} with an exponent
    (power -1 stands for the inverse).
    """
    kind: str
    index: int
    power: int = 1

    def __post_init__(self):
        assert self.kind in ("e", "f", "l", "k"), f"Unknown generator kind {self.kind}!"
        if self.kind in ("e", "f"):
            assert self.power >= 0, f"Divided powers need a non-negative exponent, but got {self.power}!"

    def __repr__(self):
        if self.kind in ("e", "f"):
            return f"{self.kind}{self.index}" if self.power == 1 else f"{self.kind}{self.index}^({self.power})"
        return f"{self.kind}{self.index}" if self.power == 1 else f"{self.kind}{self.index}^{self.power}"


def parse_generator(text: str) -> Generator:
    """'e2', 'f3^(2)', 'l1^-1', 'k4' -> Generator."""
    match = regex_generator.fullmatch(text.replace(" ", ""))
    assert match is not None, f"Cannot parse the generator string {text}!"
    kind, index, divided, plain = match.group("kind"), int(match.group("index")), match.group("divided"), \
        match.group("plain")
    power = int(divided) if divided is not None else int(plain) if plain is not None else 1
    return Generator(kind, index, power)


def e(a: int, n: int = 1) -> Generator:
    return Generator("e", a, n)


def f(a: int, n: int = 1) -> Generator:
    return Generator("f", a, n)


def _check_index(a: int, p: int):
    assert 1 <= a <= p, f"The generator index {a} is out of range for p={p}!"


def _single_e(a: int, m: int, p: int) -> Optional[int]:
    if a < p:
        return m - 1 if residue(m, p) == a + 1 else None
    return m - 1 + 2 * p if residue(m, p) == 1 else None


def _single_f(a: int, m: int, p: int) -> Optional[int]:
    if a < p:
        return m + 1 if residue(m, p) == a else None
    return m + 1 - 2 * p if residue(m, p) == p else None


def _l_exponent(a: int, m: int, p: int) -> int:
    return 1 if residue(m, p) == a else 0


def _k_exponent(a: int, m: int, p: int) -> int:
    """k_a = l_a l_{a+1}^-1 for a < p and k_p = l_p l_1^-1."""
    return _l_exponent(a, m, p) - _l_exponent(a % p + 1, m, p)


def _twist_exponents(c: Optional[Composition], d: int) -> List[int]:
    """The exponent 2j - 1 - c_i of the block scalar (-q)^(...) attached to factor j of a block of size c_i."""
    if c is None:
        return [0] * d
    c = check_composition(c, d)
    exponents = [0] * d
    for start, stop in blocks(c):
        size = stop - start
        for j in range(1, size + 1):
            exponents[start + j - 1] = 2 * j - 1 - size
    return exponents


def _apply_once(kind: str, a: int, v: TensorVector, p: int, twist: List[int]) -> TensorVector:
    """One application of e_a or f_a through the iterated coproduct."""
    pairs = []
    for gamma, coef in v.terms.items():
        d = len(gamma)
        for j in range(d):
            moved = _single_e(a, gamma[j], p) if kind == "e" else _single_f(a, gamma[j], p)
            if moved is None:
                continue
            if kind == "e":
                # k_a^-1 on the later factors
                exponent = -sum(_k_exponent(a, m, p) for m in gamma[j + 1:])
            else:
                # k_a on the earlier factors
                exponent = sum(_k_exponent(a, m, p) for m in gamma[:j])
            scalar = q_power(exponent)
            if a == p and twist[j] != 0:
                scalar = scalar * neg_q_power(twist[j] if kind == "f" else -twist[j])
            image = gamma[:j] + (moved,) + gamma[j + 1:]
            pairs.append((image, scalar * coef))
    return TensorVector.from_terms(pairs)


def chevalley_act(gen: Generator, v: TensorVector, p: int, twist: Composition = None) -> TensorVector:
    """
    gen . v on V^{(x)d}.

    Args:
        gen: the generator; e/f carry a divided power, l/k an exponent
        v: the vector
        p: the rank of gl_p
        twist: None for the plain action, or a composition c of d for the twisted module whose block of size c_i
            carries (-q)^{2j-1-c_i} on the affine generator at its j-th factor
    """
    _check_index(gen.index, p)
    if v.is_zero():
        return v
    if gen.kind in ("l", "k"):
        exponent_of = _l_exponent if gen.kind == "l" else _k_exponent
        return TensorVector({
            gamma: coef * q_power(gen.power * sum(exponent_of(gen.index, m, p) for m in gamma))
            for gamma, coef in v.terms.items()
        })

    twist_exponents = _twist_exponents(twist, v.d)
    result = v
    for _ in range(gen.power):
        result = _apply_once(gen.kind, gen.index, result, p, twist_exponents)
        if result.is_zero():
            return result
    if gen.power > 1:
        divisor = q_factorial(gen.power)
        result = TensorVector({gamma: coef.exact_div(divisor) for gamma, coef in result.terms.items()})
    return result


def act_word(word: Sequence[Generator], v: TensorVector, p: int, twist: Composition = None) -> TensorVector:
    """g_1 g_2 ... g_r . v, the rightmost generator acting first."""
    for gen in reversed(word):
        v = chevalley_act(gen, v, p, twist)
    return v


# --- weights --- #
def affine_weight_of(gamma: Sequence[int], p: int) -> GlpWeight:
    """wt(u_{r - p l}) = eps_r - l delta, summed over the factors; e_p then raises the weight by beta_p."""
    counts = [0] * p
    for m in gamma:
        counts[residue(m, p) - 1] += 1
    return GlpWeight(tuple(counts), -sum(level(m, p) for m in gamma))


def affine_weight(v: TensorVector, p: int) -> GlpWeight:
    """
    The common affine weight of a homogeneous vector.

    Raises:
        ValueError: if the vector is zero or not homogeneous.
    """
    weights = {affine_weight_of(gamma, p) for gamma in v.terms}
    if len(weights) != 1:
        raise ValueError(f"The vector is not homogeneous: it has the affine weights {sorted(map(repr, weights))}!")
    return weights.pop()


def weight(v: TensorVector, p: int) -> GlpWeight:
    return affine_weight(v, p).finite()


# --- the right Hecke action --- #
def _split(gamma: Weight, p: int) -> Tuple[Weight, Weight]:
    """gamma = gamma0 - p kappa with gamma0 in X_p."""
    return tuple(residue(m, p) for m in gamma), tuple(level(m, p) for m in gamma)


def _shift(gamma: Weight, kappa: Weight, p: int) -> Weight:
    """u_gamma . x_kappa = u_{gamma - p kappa}."""
    return tuple(g - p * k for g, k in zip(gamma, kappa))


def act_x(v: TensorVector, kappa: Weight, p: int) -> TensorVector:
    """v . x_kappa."""
    return v.map_keys(lambda gamma: _shift(gamma, kappa, p))


def _t_on_residues(gamma0: Weight, i: int) -> List[Tuple[Weight, LaurentScalar]]:
    """u_gamma0 . t_i for gamma0 in X_p."""
    a, b = gamma0[i - 1], gamma0[i]
    swapped = gamma0[:i - 1] + (b, a) + gamma0[i + 1:]
    if a == b:
        return [(gamma0, q_power(1))]
    if a > b:
        return [(swapped, ONE)]
    return [(swapped, ONE), (gamma0, QDIFF)]


def _t_finite(i: int, v: TensorVector, p: int) -> TensorVector:
    """
    v . t_i for 1 <= i < d. Off X_p the translation part is commuted past t_i with
    t_i x_i = x_{i+1} t_i - (q - q^-1) x_{i+1} and t_i x_{i+1} = x_i t_i + (q - q^-1) x_{i+1}.
    """
    pairs = []
    for gamma, coef in v.terms.items():
        gamma0, kappa = _split(gamma, p)
        a, b = kappa[i - 1], kappa[i]
        swapped_kappa = kappa[:i - 1] + (b, a) + kappa[i + 1:]
        for image, scalar in _t_on_residues(gamma0, i):
            pairs.append((_shift(image, swapped_kappa, p), scalar * coef))
        if a != b:
            sign, ks = (-1, range(b, a)) if a > b else (1, range(a, b))
            for k in ks:
                kappa_k = kappa[:i - 1] + (k, a + b - k) + kappa[i + 1:]
                pairs.append((_shift(gamma0, kappa_k, p), QDIFF * coef * sign))
    return TensorVector.from_terms(pairs)


def act_pi(v: TensorVector, p: int, k: int = 1) -> TensorVector:
    """v . pi^k with pi = x_1 t_1 ... t_{d-1} and pi^-1 = t_{d-1}^-1 ... t_1^-1 x_1^-1."""
    if v.is_zero():
        return v
    d = v.d
    unit = tuple(1 if j == 0 else 0 for j in range(d))
    for _ in range(abs(k)):
        if k > 0:
            v = act_x(v, unit, p)
            for i in range(1, d):
                v = _t_finite(i, v, p)
        else:
            for i in range(d - 1, 0, -1):
                v = _t_finite(i, v, p) - v.scale(QDIFF)
            v = act_x(v, tuple(-x for x in unit), p)
    return v


def act_t(i: int, v: TensorVector, p: int) -> TensorVector:
    """v . t_i for 1 <= i <= d; t_d = pi t_{d-1} pi^-1."""
    if v.is_zero():
        return v
    d = v.d
    assert 1 <= i <= d, f"t_{i} does not exist for d={d}!"
    if i < d:
        return _t_finite(i, v, p)
    assert d >= 2, "t_d needs d >= 2!"
    return act_pi(_t_finite(d - 1, act_pi(v, p, 1), p), p, -1)


def act_t_inv(i: int, v: TensorVector, p: int) -> TensorVector:
    return act_t(i, v, p) - v.scale(QDIFF)


def hecke_right_act(v: TensorVector, h: HeckeElt, p: int) -> TensorVector:
    """v . h; t_w for w = pi^k s_{i_1} ... s_{i_r} acts as pi^k first and then t_{i_1}, ..., t_{i_r}."""
    result = TensorVector()
    for w, coef in h.terms.items():
        word, k = reduced_word(w)
        image = act_pi(v, p, k) if k else v
        for i in word:
            image = act_t(i, image, p)
        result = result + image.scale(coef)
    return result


# --- V^{(x)d} as a sum of induced modules --- #
def tensor_to_hecke(v: TensorVector, p: int) -> List[Tuple[Composition, HeckeElt]]:
    """
    Writes v = sum_e u_{mu_e} . h_e with mu_e dominant in X_p and returns the pairs (e, h_e), where e is the
    composition (e_p, ..., e_1) of mu_e. Under u_{mu_e} . h -> rho_e h this is the decomposition into rho_e H.
    """
    parts: Dict[Composition, HeckeElt] = {}
    for gamma, coef in v.terms.items():
        mu, y = fundamental_domain(gamma, p)
        _, e_comp = weight_tilde(mu, p)
        h = t(finite(y.perm)) * monomial_x(y.trans)
        parts[e_comp] = parts.get(e_comp, HeckeElt()) + h.scale(coef)
    return [(e_comp, parts[e_comp]) for e_comp in sorted(parts) if not parts[e_comp].is_zero()]

