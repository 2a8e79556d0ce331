import pytest

from perichain.algebra.hecke import (
    HeckeElt,
    bar_hecke,
    monomial_x,
    mult,
    nu,
    pi,
    rho,
    sign_char,
    sign_value,
    t,
    t_simple,
    t_simple_inv,
    unit,
    x_generator,
)
from perichain.algebra.laurent import Q, QDIFF, QINV, ZERO, q_power
from perichain.lattice.weyl import finite, simple


def test_quadratic_relation():
    t1 = t_simple(1, 2)
    assert t1 * t1 == unit(2) + t1.scale(QDIFF)
    assert t1 * t_simple_inv(1, 2) == unit(2)
    assert t_simple_inv(1, 2) * t1 == unit(2)


def test_braid_relations():
    t1, t2, t3 = t_simple(1, 3), t_simple(2, 3), t_simple(3, 3)
    assert t1 * t2 * t1 == t2 * t1 * t2
    assert t2 * t3 * t2 == t3 * t2 * t3
    assert t1 * t2 * t1 == t(finite((2, 1, 0)))


def test_pi_conjugation():
    d = 3
    for i in range(1, d + 1):
        assert pi(d) * t_simple(i, d) * pi(d, -1) == t_simple(i % d + 1, d)
    assert pi(d) * pi(d, -1) == unit(d)


def test_product_is_associative():
    a = t_simple(1, 2) + pi(2).scale(Q)
    b = t_simple(2, 2).scale(QINV) - unit(2)
    c = pi(2, -1) + t_simple(1, 2)
    assert (a * b) * c == a * (b * c)


def test_x_generators():
    d = 3
    for i in range(1, d + 1):
        assert x_generator(i, d) * x_generator(i, d, -1) == unit(d)
    x1, x2, x3 = (x_generator(i, d) for i in range(1, d + 1))
    assert x1 * x2 == x2 * x1
    assert x2 * x3 == x3 * x2


def test_x_of_the_determinant_is_central():
    assert monomial_x((1, 1)) == pi(2, 2)
    z = monomial_x((1, 1, 1))
    assert z == pi(3, 3)
    assert z * t_simple(1, 3) == t_simple(1, 3) * z


def test_bernstein_relation():
    d = 2
    t1, x1, x2 = t_simple(1, d), x_generator(1, d), x_generator(2, d)
    assert t1 * x1 * t1 == x2
    # t_i x_i - x_{i+1} t_i = -(q - q^-1) x_{i+1}
    assert t1 * x1 - x2 * t1 == x2.scale(-QDIFF)


def test_bar_involution():
    t1 = t_simple(1, 2)
    assert t1.bar() == t_simple_inv(1, 2)
    h = t1.scale(Q) + pi(2) * t_simple(2, 2)
    assert bar_hecke(bar_hecke(h)) == h
    assert (t1 + unit(2).scale(QINV)).bar() == t1 + unit(2).scale(QINV)
    a, b = t1 + pi(2), t_simple(2, 2).scale(Q)
    assert (a * b).bar() == a.bar() * b.bar()


def test_rho():
    element, m_f = rho((2,))
    assert element == unit(2) + t_simple(1, 2).scale(Q)
    assert m_f == 1 + q_power(2)
    # rho_f t_i = q rho_f for i in I_f
    assert element * t_simple(1, 2) == element.scale(Q)
    assert nu((2, 1)) == 1
    assert nu((3,)) == 3


def test_sign_character():
    assert sign_char(("t", 1), (2,)) == -QINV
    assert sign_char(("x", 1, -1), (2,)) == q_power(-2)
    with pytest.raises(AssertionError):
        sign_char(("t", 1), (1, 1))
    assert sign_value(t_simple(1, 2), (2,)) == -QINV
    assert sign_value(rho((2,))[0], (2,)) == ZERO
    with pytest.raises(AssertionError):
        sign_value(t(simple(2, 2)), (2,))


def test_records_are_sorted_by_length():
    h = HeckeElt.from_terms([(finite((1, 0)), Q), (finite((0, 1)), 2)])
    records = h.to_records()
    assert records[0][0] == {"perm": [1, 2], "trans": [0, 0], "pi_power": 0}
    assert records[1][1] == [[1, 1]]


def test_mult_agrees_with_the_product():
    t1, t2 = t_simple(1, 3), t_simple(2, 3)
    h = t1 + t2.scale(Q)
    assert mult(h, h) == h * h
    assert mult(t1, t1) == unit(3) + t1.scale(QDIFF)
