"""
    Author: perichain contributors
    Date: 2026.10

    The comparison maps between the periodic module and the tensor quotient:

    b:      M_c -> H (x)_{H'_c} A^-,                  g_n(A'_+ . w) -> (bar(t_w) (x) 1) . x_{n}
    a_mu:   rho_e H (x)_{H'_c} A^- -> N_c,           (rho_e h (x) 1) . r -> [u_mu <> bar(h)] . r
    d_mu:   a_mu o b
    c_mu:   the inverse of d_mu on its image

    a_mu applies the bar involution to h, so it conjugates the scalars of its argument. d_mu inherits this: it sends
    f A to bar(f) d_mu(A). On a single alcove d_mu(g_n(A'_+ . w)) = (-1)^{s(n)} t(mu w, n).
"""

from typing import Optional, Tuple

from perichain import ConventionError
from perichain.algebra.hecke import HeckeElt, rho, t
from perichain.algebra.laurent import q_power
from perichain.lattice.alcove import compose_alcove, decompose
from perichain.lattice.rootdata import GlpWeight, RcMonomial, Weight, dominant_from_tilde
from perichain.lattice.weyl import Permutation, finite, permute_weight, sigma_c
from perichain.module.abs import SparseVector
from perichain.module.periodic import PeriodicVector
from perichain.module.quotient import QuotientSpace, QuotientVector, TensorBasisIndex
from perichain.module.tensor import TensorVector, hecke_right_act


class InducedVector(SparseVector):
    """
    A finite combination of (bar(t_w) (x) 1) . x_{n + Z I_c} in H (x)_{H'_c} A^-, keyed by (w, n) with w in W^c.
    """

    @staticmethod
    def key_record(key: Tuple[Permutation, Tuple[int, ...]]):
        w, n = key
        return dict(w=list(w), coset=list(n))


def check_small(mu_tilde: GlpWeight, space: QuotientSpace):
    assert space.p > space.d, f"The comparison maps need p > d, but got p={space.p}, d={space.d}!"
    assert mu_tilde.is_small() and sum(mu_tilde.finite_part) == space.d, \
        f"{mu_tilde} is not a small weight of degree d={space.d}!"


def map_b(v: PeriodicVector, c) -> InducedVector:
    """
    Raises:
        ConventionError: if a support alcove has no decomposition g_n(A'_+ . w).
    """
    return InducedVector.from_terms((decompose(A, tuple(c)), coef) for A, coef in v.terms.items())


def induced_to_periodic(x: InducedVector, c) -> PeriodicVector:
    """The inverse of map_b."""
    return PeriodicVector.from_terms((compose_alcove(w, n, tuple(c)), coef) for (w, n), coef in x.terms.items())


def map_a_mu(space: QuotientSpace, mu_tilde: GlpWeight, h: HeckeElt, r: RcMonomial = None) -> QuotientVector:
    """
    The image of (rho_e h (x) 1) . r: the class of u_mu <> bar(h), moved by r in R_c.

    Args:
        space: the quotient N_c
        mu_tilde: any weight in Omega; mu is its dominant preimage
        h: the cofactor of rho_e
        r: an R_c monomial; None stands for 1
    """
    mu = dominant_from_tilde(mu_tilde.finite())
    image = space.reduce(hecke_right_act(TensorVector.basis(mu), h.bar(), space.p))
    if r is None:
        return image
    return space.act_rc(image, r.coset).scale(r.scale)


def map_a_on_induced(space: QuotientSpace, mu_tilde: GlpWeight, x: InducedVector) -> QuotientVector:
    """a_mu extended over an InducedVector: f (bar(t_w) (x) x_n) -> bar(f) a_mu(bar(t_w), x_n)."""
    result = QuotientVector()
    for (w, n), coef in x.terms.items():
        image = map_a_mu(space, mu_tilde, t(finite(w)).bar(), RcMonomial(tuple(n)))
        result = result + image.scale(coef.bar())
    return result


def alcove_image(space: QuotientSpace, mu: Weight, w: Permutation, n: Tuple[int, ...]) -> QuotientVector:
    """d_mu(g_n(A'_+ . w)) = (-1)^{s(n)} t(mu[w], n)."""
    index = TensorBasisIndex(permute_weight(mu, w), tuple(n))
    sign = -1 if space.sign_exponent(n) % 2 else 1
    return space.basis_vector(index).scale(sign)


def map_d_mu(space: QuotientSpace, mu_tilde: GlpWeight, v: PeriodicVector) -> QuotientVector:
    """
    d_mu = a_mu o b on a periodic vector.

    Raises:
        AssertionError: if mu_tilde is not small or p <= d.
        ConventionError: if a support alcove has no decomposition g_n(A'_+ . w).
    """
    check_small(mu_tilde, space)
    mu = dominant_from_tilde(mu_tilde)
    result = QuotientVector()
    for A, coef in v.terms.items():
        w, n = decompose(A, space.c)
        result = result + alcove_image(space, mu, w, n).scale(coef.bar())
    return result


def map_c_mu(space: QuotientSpace, mu_tilde: GlpWeight, x: QuotientVector) -> PeriodicVector:
    """
    The inverse of d_mu on its image. Every t(residues, n) has exactly one preimage alcove because the entries of a
    small mu are distinct.

    Raises:
        ConventionError: if some basis index is not of the form t(mu[w], n) with w in W^c.
    """
    check_small(mu_tilde, space)
    mu = dominant_from_tilde(mu_tilde)
    position = {m: j for j, m in enumerate(mu)}
    pairs = []
    for index, coef in x.terms.items():
        w = preimage_perm(index.residues, position)
        if w is None or permute_weight(mu, w) != index.residues:
            raise ConventionError(f"{index} does not lie in the image of d_mu for mu={mu}!")
        sign = -1 if space.sign_exponent(index.coset) % 2 else 1
        A = compose_alcove(w, index.coset, space.c)
        pairs.append((A, (coef * sign).bar()))
    return PeriodicVector.from_terms(pairs)


def preimage_perm(residues: Weight, position: dict) -> Optional[Permutation]:
    """The w with mu[w] = residues, or None if residues is not a rearrangement of mu."""
    if sorted(residues) != sorted(position):
        return None
    return tuple(position[r] for r in residues)


def b_of_m_c_closed_form(data) -> HeckeElt:
    """q^{-nu_d} rho_d bar(t_{sigma_c}), the closed form of b(m_c) before it is read in H (x)_{H'_c} A^-."""
    rho_d, _ = rho(data.d_comp)
    return (rho_d * t(finite(sigma_c(data))).bar()).scale(q_power(-data.nu_d))

