import pytest

from perichain.algebra.laurent import (
    LaurentScalar,
    ONE,
    Q,
    QDIFF,
    QINV,
    ZERO,
    bar_scalar,
    neg_q_power,
    q_factorial,
    q_integer,
    q_power,
)


def test_zero_coefficients_are_stripped():
    f = LaurentScalar({0: 0, 2: 3, -1: 0})
    assert f.coeffs == {2: 3}
    assert LaurentScalar({1: 1}) - Q == ZERO
    assert not ZERO
    assert ZERO.is_zero()


def test_ring_operations():
    f = Q + 2
    assert f * QINV == ONE + QINV * 2
    assert (Q + QINV) * (Q - QINV) == q_power(2) - q_power(-2)
    assert 3 - Q == LaurentScalar({0: 3, 1: -1})
    assert QDIFF == LaurentScalar({1: 1, -1: -1})
    assert f ** 2 == q_power(2) + q_power(1, 4) + 4


def test_negative_powers_only_for_units():
    assert Q ** -2 == q_power(-2)
    assert (-Q) ** -1 == -QINV
    with pytest.raises(AssertionError):
        (Q + 1) ** -1


def test_bar_involution():
    f = LaurentScalar({-2: 1, 0: 5, 3: -1})
    assert f.bar() == LaurentScalar({2: 1, 0: 5, -3: -1})
    assert f.bar().bar() == f
    assert (Q + QINV).is_bar_fixed()
    assert not f.is_bar_fixed()


def test_triangularity_predicates():
    assert (QINV + q_power(-3)).is_sub_unitriangular()
    assert not (ONE + QINV).is_sub_unitriangular()
    assert ZERO.is_sub_unitriangular()
    assert (Q + q_power(2)).is_super_unitriangular()
    assert not QINV.is_super_unitriangular()


def test_parts():
    f = LaurentScalar({-2: 1, 0: 5, 3: -1})
    assert f.negative_part() == q_power(-2)
    assert f.positive_part() == q_power(3, -1)


@pytest.mark.parametrize("f, completed", [
    (q_power(2), q_power(2) + q_power(-2)),
    (2 + Q, 2 + Q + QINV),
    (QINV, ZERO),
])
def test_symmetric_completion(f, completed):
    r = f.symmetric_completion()
    assert r == completed
    assert r.is_bar_fixed()
    assert (f - r).is_sub_unitriangular()


def test_exact_division():
    product = (Q + QINV) * (q_power(2) - 3)
    assert product.exact_div(Q + QINV) == q_power(2) - 3
    assert q_factorial(3).exact_div(q_integer(3)) == q_factorial(2)
    with pytest.raises(ArithmeticError):
        (Q + 2).exact_div(Q + QINV)
    with pytest.raises(ArithmeticError):
        ONE.exact_div(LaurentScalar.from_int(2))


def test_quantum_integers():
    assert q_integer(0) == ZERO
    assert q_integer(1) == ONE
    assert q_integer(2) == Q + QINV
    assert q_integer(3) == q_power(2) + 1 + q_power(-2)
    assert q_factorial(2) == Q + QINV
    assert all(q_integer(n).is_bar_fixed() for n in range(6))


def test_neg_q_power():
    assert neg_q_power(0) == ONE
    assert neg_q_power(1) == -Q
    assert neg_q_power(-3) == -q_power(-3)
    assert neg_q_power(2) == q_power(2)


def test_serialization():
    f = LaurentScalar({-1: -1, 0: 2, 2: 1})
    assert f.to_pairs() == [[-1, -1], [0, 2], [2, 1]]
    assert LaurentScalar.from_pairs([(-1, -1), (0, 2), (2, 1), (2, 0)]) == f
    assert f.to_latex() == "-q^{-1} + 2 + q^{2}"
    assert ZERO.to_latex() == "0"


def test_equality_and_hash():
    assert LaurentScalar.from_int(3) == 3
    assert hash(Q + 1) == hash(LaurentScalar({0: 1, 1: 1}))
    assert len({Q + 1, 1 + Q, Q}) == 2


def test_bar_scalar():
    assert bar_scalar(Q + 2) == QINV + 2
    assert bar_scalar(QDIFF) == -QDIFF
