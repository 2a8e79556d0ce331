import pytest

from perichain import ConventionError
from perichain.algebra.hecke import t_simple, unit
from perichain.algebra.laurent import ONE, Q, QDIFF, QINV
from perichain.bridge.maps import (
    InducedVector,
    alcove_image,
    b_of_m_c_closed_form,
    induced_to_periodic,
    map_a_mu,
    map_a_on_induced,
    map_b,
    map_c_mu,
    map_d_mu,
    preimage_perm,
)
from perichain.lattice.alcove import alcove_of, base_alcove, compose_alcove
from perichain.lattice.rootdata import GlpWeight, RcMonomial
from perichain.module.periodic import build_m_c, periodic_alcove
from perichain.module.quotient import TensorBasisIndex, build_quotient

MU_TILDE = GlpWeight((1, 1, 0), 0)
BASE = base_alcove(2)
BELOW = alcove_of((1, 0))


@pytest.fixture
def space(data_c11):
    return build_quotient(data_c11)


def tensor_basis(space, residues, coset=(0, 0)):
    return space.basis_vector(TensorBasisIndex(residues, coset))


def test_map_b(data_c11):
    m_c = build_m_c(data_c11)
    x = map_b(m_c, data_c11.c)
    assert x == InducedVector({((0, 1), (0, 0)): ONE, ((1, 0), (0, 0)): QINV})
    assert induced_to_periodic(x, data_c11.c) == m_c
    assert x.to_records()[0][0] == {"w": [0, 1], "coset": [0, 0]}


def test_map_b_rejects_alcoves_outside_the_slab():
    with pytest.raises(ConventionError):
        map_b(periodic_alcove(BELOW), (2,))


def test_d_on_alcoves(space):
    assert map_d_mu(space, MU_TILDE, periodic_alcove(BASE)) == tensor_basis(space, (2, 1))
    assert map_d_mu(space, MU_TILDE, periodic_alcove(BELOW)) == tensor_basis(space, (1, 2))
    moved = compose_alcove((1, 0), (1, -1), space.c)
    assert map_d_mu(space, MU_TILDE, periodic_alcove(moved)) == tensor_basis(space, (1, 2), (1, -1))


def test_d_is_semilinear(space, data_c11):
    m_c = build_m_c(data_c11)
    assert map_d_mu(space, MU_TILDE, m_c) == tensor_basis(space, (2, 1)) + tensor_basis(space, (1, 2)).scale(Q)
    assert map_d_mu(space, MU_TILDE, m_c.scale(Q)) == map_d_mu(space, MU_TILDE, m_c).scale(QINV)


def test_d_factors_through_b(space, data_c11):
    m_c = build_m_c(data_c11)
    v = m_c + periodic_alcove(compose_alcove((1, 0), (-1, 1), space.c)).scale(Q + 2)
    assert map_a_on_induced(space, MU_TILDE, map_b(v, data_c11.c)) == map_d_mu(space, MU_TILDE, v)


def test_c_inverts_d(space, data_c11):
    v = build_m_c(data_c11) + periodic_alcove(compose_alcove((0, 1), (1, -1), space.c)).scale(QDIFF)
    assert map_c_mu(space, MU_TILDE, map_d_mu(space, MU_TILDE, v)) == v
    with pytest.raises(ConventionError):
        map_c_mu(space, MU_TILDE, tensor_basis(space, (3, 1)))


def test_small_weights_only(space):
    with pytest.raises(AssertionError):
        map_d_mu(space, GlpWeight((2, 0, 0), 0), periodic_alcove(BASE))


def test_a_mu(space):
    assert map_a_mu(space, MU_TILDE, unit(2)) == tensor_basis(space, (2, 1))
    assert map_a_mu(space, MU_TILDE, t_simple(1, 2)) == \
        tensor_basis(space, (1, 2)) - tensor_basis(space, (2, 1)).scale(QDIFF)
    shifted = map_a_mu(space, MU_TILDE, unit(2), RcMonomial((1, -1), Q))
    assert shifted == tensor_basis(space, (2, 1), (1, -1)).scale(Q)


def test_alcove_image_carries_the_coset_sign(data_c2):
    space = build_quotient(data_c2)
    assert alcove_image(space, (2, 1), (0, 1), (1,)) == space.basis_vector(TensorBasisIndex((2, 1), (1,))).scale(-1)
    assert alcove_image(space, (2, 1), (0, 1), (2,)) == space.basis_vector(TensorBasisIndex((2, 1), (2,)))


def test_preimage_perm():
    position = {3: 0, 1: 1}
    assert preimage_perm((1, 3), position) == (1, 0)
    assert preimage_perm((2, 3), position) is None


def test_closed_form_of_b_of_m_c(data_c11, data_c2):
    assert b_of_m_c_closed_form(data_c11) == (t_simple(1, 2) + unit(2).scale(QINV)).scale(QINV)
    assert b_of_m_c_closed_form(data_c2) == unit(2)
