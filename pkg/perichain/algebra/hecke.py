"""
    Author: perichain contributors
    Date: 2026.10

    The affine Hecke algebra H of GL_d in the basis {t_w : w in W}, with the Bernstein elements x_gamma expanded in
    that basis, the parabolic elements rho_f, the bar involution and the sign character of H'_c.
"""

from functools import lru_cache
from typing import Dict, Tuple

from perichain.algebra.laurent import LaurentScalar, QDIFF, QINV, ZERO, q_power
from perichain.lattice.rootdata import Composition, Weight, parabolic_simples
from perichain.lattice.weyl import (
    AffineWeylElt,
    compose,
    finite,
    identity,
    inversions,
    length,
    parabolic_subgroup,
    pi_power_elt,
    reduced_word,
    simple,
)
from perichain.module.abs import SparseVector


class HeckeElt(SparseVector):
    """
    Finitely supported function W -> Z[q, q^-1] in the basis {t_w}.
    The product of two elements is the algebra product; products with scalars are scalar multiplication.
    """

    @staticmethod
    def key_order(key: AffineWeylElt):
        return length(key), key

    @staticmethod
    def key_record(key: AffineWeylElt):
        return key.to_record()

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return mult(self, other)
        return super(HeckeElt, self).__mul__(other)

    def bar(self) -> "HeckeElt":
        return bar_hecke(self)


# --- basis multiplication --- #
def t(w: AffineWeylElt) -> HeckeElt:
    return HeckeElt.basis(w)


def unit(d: int) -> HeckeElt:
    return HeckeElt.basis(identity(d))


def mult_simple(a: HeckeElt, i: int) -> HeckeElt:
    """a * t_i using t_w t_i = t_{w s_i} if l(w s_i) > l(w), else t_{w s_i} + (q - q^-1) t_w."""
    terms: Dict[AffineWeylElt, LaurentScalar] = {}
    for w, coef in a.terms.items():
        ws = compose(w, simple(i, w.d))
        terms[ws] = terms.get(ws, ZERO) + coef
        if length(ws) < length(w):
            terms[w] = terms.get(w, ZERO) + QDIFF * coef
    return HeckeElt(terms)


def mult_pi(a: HeckeElt, k: int) -> HeckeElt:
    """a * pi^k; pi has length zero so the basis is permuted."""
    if a.is_zero():
        return a
    d = next(iter(a.terms)).d
    shift = pi_power_elt(k, d)
    return a.map_keys(lambda w: compose(w, shift))


def mult_basis(a: HeckeElt, y: AffineWeylElt) -> HeckeElt:
    """a * t_y through a reduced word y = pi^k s_{i_1} ... s_{i_r}."""
    word, k = reduced_word(y)
    result = mult_pi(a, k)
    for i in word:
        result = mult_simple(result, i)
    return result


def mult(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    result = HeckeElt()
    for y, coef in b.terms.items():
        result = result + mult_basis(a, y).scale(coef)
    return result


# --- generators --- #
def t_simple(i: int, d: int) -> HeckeElt:
    return t(simple(i, d))


def t_simple_inv(i: int, d: int) -> HeckeElt:
    """t_i^-1 = t_i - (q - q^-1)."""
    return t_simple(i, d) - unit(d).scale(QDIFF)


def pi(d: int, k: int = 1) -> HeckeElt:
    return t(pi_power_elt(k, d))


@lru_cache(maxsize=None)
def x_generator(i: int, d: int, sign: int = 1) -> HeckeElt:
    """
    x_i^{sign}. x_1 = pi t_{d-1}^-1 ... t_1^-1 solves pi = x_1 t_1 ... t_{d-1}, and x_{i+1} = t_i x_i t_i.
    """
    assert 1 <= i <= d, f"x_{i} does not exist for d={d}!"
    if i == 1:
        if sign > 0:
            result = pi(d)
            for j in range(d - 1, 0, -1):
                result = result * t_simple_inv(j, d)
        else:
            result = unit(d)
            for j in range(1, d):
                result = result * t_simple(j, d)
            result = result * pi(d, -1)
        return result
    if sign > 0:
        return t_simple(i - 1, d) * x_generator(i - 1, d, 1) * t_simple(i - 1, d)
    return t_simple_inv(i - 1, d) * x_generator(i - 1, d, -1) * t_simple_inv(i - 1, d)


@lru_cache(maxsize=None)
def monomial_x(gamma: Weight) -> HeckeElt:
    """x_gamma = prod_i x_i^{gamma_i}; the x_i commute."""
    d = len(gamma)
    result = unit(d)
    for i, exponent in enumerate(gamma, start=1):
        for _ in range(abs(exponent)):
            result = result * x_generator(i, d, 1 if exponent > 0 else -1)
    return result


# --- bar involution --- #
@lru_cache(maxsize=None)
def bar_basis(w: AffineWeylElt) -> HeckeElt:
    """bar(t_w) = pi^k t_{i_1}^-1 ... t_{i_r}^-1 for a reduced word of w."""
    word, k = reduced_word(w)
    result = pi(w.d, k)
    for i in word:
        result = result * t_simple_inv(i, w.d)
    return result


def bar_hecke(a: HeckeElt) -> HeckeElt:
    result = HeckeElt()
    for w, coef in a.terms.items():
        result = result + bar_basis(w).scale(coef.bar())
    return result


# --- parabolic elements --- #
@lru_cache(maxsize=None)
def rho(f: Composition) -> Tuple[HeckeElt, LaurentScalar]:
    """(rho_f, m_f) with rho_f = sum_{w in W_f} q^{l(w)} t_w and m_f = sum_{w in W_f} q^{2 l(w)}."""
    element, m_f = HeckeElt(), ZERO
    for w in parabolic_subgroup(tuple(f)):
        ell = inversions(w)
        element = element + t(finite(w)).scale(q_power(ell))
        m_f = m_f + q_power(2 * ell)
    return element, m_f


def nu(f: Composition) -> int:
    """nu_f = l(w_f)."""
    return sum(x * (x - 1) // 2 for x in f)


# --- the sign character of H'_c --- #
def sign_char(generator: Tuple, c: Composition) -> LaurentScalar:
    """
    The one-dimensional representation of H'_c: t_i -> -q^-1 and x_{alpha_i}^{+-1} -> q^{+-2} for i in I_c.

    Args:
        generator: ("t", i) or ("x", i, sign) with sign in {1, -1}
    """
    simples = parabolic_simples(tuple(c))
    kind, i = generator[0], generator[1]
    assert i in simples, f"{generator} is not a generator of H'_c for c={c}: {i} is not in I_c={sorted(simples)}!"
    if kind == "t":
        return -QINV
    if kind == "x":
        sign = generator[2] if len(generator) > 2 else 1
        assert sign in (1, -1), f"Unknown sign {sign} in {generator}!"
        return q_power(2 * sign)
    raise ValueError(f"Unknown generator kind {kind} in {generator}!")


def sign_value(a: HeckeElt, c: Composition) -> LaurentScalar:
    """
    The value of the sign character on a finite element of H_c: t_w -> (-q^-1)^{l(w)}.
    Only elements supported on W_c are accepted.
    """
    total = ZERO
    for w, coef in a.terms.items():
        assert w.is_finite() and w.perm in parabolic_subgroup(tuple(c)), f"{w} does not lie in W_c for c={c}!"
        total = total + coef * (-QINV) ** inversions(w.perm)
    return total

