import pytest

from perichain.lattice.rootdata import dual_data, omega
from perichain.lattice.weyl import (
    AffineWeylElt,
    all_perms,
    compose,
    compose_perm,
    coset_reps,
    finite,
    from_word,
    fundamental_domain,
    identity,
    inversions,
    invert,
    invert_perm,
    length,
    level_p_action,
    longest_element,
    min_left_reps,
    min_right_reps,
    parabolic_subgroup,
    permute_weight,
    pi_elt,
    pi_power_elt,
    reduced_word,
    sigma_c,
    sigma_min,
    simple,
    simple_perm,
    translation,
)


def test_permutations():
    w = (2, 0, 1)
    assert compose_perm(w, invert_perm(w)) == (0, 1, 2)
    assert permute_weight((10, 20, 30), w) == (30, 10, 20)
    assert inversions((2, 1, 0)) == 3
    assert len(all_perms(3)) == 6 and all_perms(3)[0] == (0, 1, 2)


def test_right_action_is_an_action():
    gamma = (5, -1, 2)
    x = AffineWeylElt((1, 2, 0), (1, 0, -1))
    y = AffineWeylElt((0, 2, 1), (-2, 1, 1))
    p = 4
    assert level_p_action(level_p_action(gamma, x, p), y, p) == level_p_action(gamma, compose(x, y), p)
    assert compose(x, invert(x)) == identity(3)


def test_affine_simple_reflection():
    assert level_p_action((1, 2), simple(2, 2), 3) == (5, -2)
    assert simple(3, 3) == AffineWeylElt((2, 1, 0), (-1, 0, 1))


def test_pi():
    assert level_p_action((4, 5, 6), pi_elt(3), 7) == (5, 6, -3)
    assert length(pi_elt(3)) == 0
    assert compose(pi_elt(2), pi_elt(2)) == translation(omega(2, 2))
    assert compose(pi_power_elt(2, 3), pi_power_elt(-2, 3)) == identity(3)


@pytest.mark.parametrize("x, expected", [
    (identity(3), 0),
    (simple(1, 3), 1),
    (simple(3, 3), 1),
    (finite((2, 1, 0)), 3),
    (translation((1, -1)), 2),
    (translation((1, 0, -1)), 4),
])
def test_length(x, expected):
    assert length(x) == expected


def test_reduced_words_rebuild_the_element():
    for x in [finite((2, 1, 0)), translation((1, 0, -1)), compose(pi_elt(3), simple(2, 3)),
              AffineWeylElt((1, 0, 2), (2, -1, 0))]:
        word, k = reduced_word(x)
        assert len(word) == length(x)
        assert from_word(word, k, x.d) == x


def test_parabolic_subgroups():
    assert parabolic_subgroup((2, 1)) == ((0, 1, 2), (1, 0, 2))
    assert longest_element((2, 1)) == (1, 0, 2)
    assert longest_element((3,)) == (2, 1, 0)
    assert min_left_reps((2, 1)) == ((0, 1, 2), (0, 2, 1), (1, 2, 0))
    assert set(min_right_reps((2, 1))) == {invert_perm(w) for w in min_left_reps((2, 1))}
    assert len(min_left_reps((1, 1, 1))) == 6


def test_sigma_c():
    assert sigma_c(dual_data(3, (2,))) == (0, 1)
    assert sigma_c(dual_data(3, (1, 1))) == (1, 0)
    assert sigma_min(dual_data(3, (1, 1))) == (0, 1)
    for c in [(3,), (2, 1), (1, 1, 1)]:
        data = dual_data(4, c)
        sigma = sigma_c(data)
        assert sigma in min_left_reps(c)
        assert sigma_min(data) in min_left_reps(c)
        assert inversions(sigma_min(data)) == inversions(sigma) - data.nu_d


@pytest.mark.parametrize("gamma", [(5, -2), (3, 3), (1, 2, 3), (-4, 7, 0), (2, 2, -1)])
def test_fundamental_domain(gamma):
    p = 3
    mu, y = fundamental_domain(gamma, p)
    assert level_p_action(mu, y, p) == gamma
    assert list(mu) == sorted(mu, reverse=True)
    assert all(1 <= m <= p for m in mu)


def test_fundamental_domain_example():
    mu, y = fundamental_domain((5, -2), 3)
    assert mu == (2, 1)
    assert y == AffineWeylElt((0, 1), (-1, 1))


def test_simple_perm_range():
    assert simple_perm(1, 2) == (1, 0)
    with pytest.raises(AssertionError):
        simple_perm(2, 2)


def test_coset_reps():
    in_left, in_right = coset_reps((2, 1))
    assert in_left((1, 2, 0))
    assert not in_right((1, 2, 0))
    assert in_right((2, 0, 1))
    assert not in_left((2, 0, 1))
    assert sorted(w for w in all_perms(3) if in_left(w)) == sorted(min_left_reps((2, 1)))
