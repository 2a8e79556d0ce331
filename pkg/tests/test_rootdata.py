import pytest

from perichain.algebra.laurent import Q, q_power
from perichain.lattice.rootdata import (
    GlpWeight,
    alpha,
    alpha_c,
    beta,
    block_sums,
    blocks,
    compositions,
    coset_sign_exponent,
    data_from_d,
    dominance_leq,
    dominant_from_tilde,
    dual_data,
    in_X_prime,
    is_partition,
    level,
    omega,
    omega_set,
    omega_small,
    pairing,
    parabolic_simples,
    parse_weight,
    partitions,
    psi_monomial,
    residue,
    theta,
    weight_tilde,
)


def test_lattice_vectors():
    assert omega(2, 3) == (1, 1, 0)
    assert alpha(1, 3) == (1, -1, 0)
    assert theta(3) == (1, 0, -1)
    assert pairing(omega(2, 3), theta(3)) == 1
    assert pairing(alpha(1, 2), alpha(1, 2)) == 2


def test_dominance_order():
    assert dominance_leq((1, 1), (2, 0))
    assert not dominance_leq((2, 0), (1, 1))
    assert dominance_leq((1, 1, 1), (1, 1, 1))
    assert not dominance_leq((1, 1), (2, 1))


def test_compositions_and_partitions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert list(partitions(4, 2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert is_partition((2, 1)) and not is_partition((1, 2)) and not is_partition((2, 0))
    assert blocks((2, 0, 1)) == [(0, 2), (2, 3)]


@pytest.mark.parametrize("f, simples", [
    ((2, 1), {1}),
    ((1, 1, 1), set()),
    ((3,), {1, 2}),
    ((0, 2, 1), {1}),
])
def test_parabolic_simples(f, simples):
    assert parabolic_simples(f) == frozenset(simples)


def test_residue_and_level():
    for m in range(-7, 8):
        r, l = residue(m, 3), level(m, 3)
        assert 1 <= r <= 3
        assert m == r - 3 * l
    assert residue(0, 3) == 3 and level(0, 3) == 1
    assert residue(-2, 3) == 1 and level(-2, 3) == 1


def test_weight_tilde():
    mu_tilde, e = weight_tilde((3, 2, 1), 4)
    assert mu_tilde == GlpWeight((1, 1, 1, 0), 0)
    assert e == (0, 1, 1, 1)
    assert dominant_from_tilde(mu_tilde) == (3, 2, 1)
    assert dominant_from_tilde(GlpWeight((2, 0, 1), 0)) == (3, 1, 1)
    with pytest.raises(AssertionError):
        weight_tilde((5, 1), 4)


def test_omega_sets():
    assert len(omega_set(2, 3)) == 6
    assert omega_small(2, 3) == [GlpWeight((1, 1, 0)), GlpWeight((1, 0, 1)), GlpWeight((0, 1, 1))]
    assert all(w.is_small() for w in omega_small(3, 4))
    assert len(omega_small(3, 4)) == 4


def test_positive_cone():
    assert beta(1, 2).in_positive_cone()
    assert beta(2, 2).in_positive_cone()
    assert (beta(1, 3) + beta(3, 3)).in_positive_cone()
    assert not GlpWeight((-1, 1), 0).in_positive_cone()
    assert not GlpWeight((1, 0), 0).in_positive_cone()
    assert not GlpWeight((0, 0), -1).in_positive_cone()


def test_in_X_prime():
    assert in_X_prime((-2, 4), 3)
    assert not in_X_prime((-2, 1), 3)
    assert in_X_prime((2, 1), 3)


def test_alpha_c_and_psi():
    assert alpha_c((2,)) == (1, -1)
    assert alpha_c((3,)) == (2, 0, -2)
    assert alpha_c((2, 1)) == (1, -1, 0)

    image = psi_monomial((1, -1), (2,))
    assert image.coset == (0,) and image.scale == q_power(2)
    image = psi_monomial((1, 0), (2,))
    assert image.coset == (1,) and image.scale == Q
    assert block_sums((1, 2, -3), (2, 1)) == (3, -3)


def test_coset_sign_exponent_has_the_parity_of_the_pairing():
    c = (2, 1)
    for gamma in [(1, 0, -1), (0, 1, -1), (2, -1, -1), (3, 0, -3)]:
        n = block_sums(gamma, c)
        assert coset_sign_exponent(n, c) % 2 == pairing(gamma, alpha_c(c)) % 2


def test_dual_data():
    data = dual_data(3, (2, 1))
    assert data.d == 3
    assert data.d_seq == (2, 1, 0)
    assert data.d_comp == (0, 1, 2)
    assert data.lambda_tilde == (2, 1, 0)
    assert data.ell == 2 and data.ell_a == (1, 1, 0)
    assert data.dominant_lambda == (2, 1, 1)
    assert data.cyclic_pattern == (2, 1, 1)
    assert data.nu_d == 1
    assert data_from_d(3, (2, 1, 0)) == data


def test_dual_data_rejects_bad_input():
    with pytest.raises(AssertionError):
        dual_data(3, (1, 2))
    with pytest.raises(AssertionError):
        dual_data(2, (3,))
    with pytest.raises(AssertionError):
        data_from_d(3, (0, 1, 0))


def test_parse_weight():
    assert parse_weight("1, -2,3") == (1, -2, 3)
    assert parse_weight("2,") == (2,)
