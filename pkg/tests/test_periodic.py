import pytest

from perichain import ConventionError
from perichain.algebra.hecke import pi, t_simple
from perichain.algebra.laurent import ONE, Q, QINV, q_integer
from perichain.lattice.rootdata import dual_data
from perichain.lattice.alcove import Window, alcove_of, base_alcove, compose_alcove, generic_less, height, left_act
from perichain.module.periodic import (
    CanonicalBasisSearch,
    act_coset,
    act_hecke,
    act_t,
    act_t_inv,
    act_x,
    build_m_c,
    canonical_basis,
    certify_entry,
    iota_M_on_span,
    leading_alcove_of_m_c,
    m_c_from_hecke,
    periodic_alcove,
    raise_,
    spanning_family,
    truncate_below,
)

C11 = (1, 1)
BASE = base_alcove(2)
BELOW = alcove_of((1, 0))


def test_m_c(data_c2, data_c11):
    assert build_m_c(data_c2) == periodic_alcove(BASE)
    m_c = build_m_c(data_c11)
    assert m_c == periodic_alcove(BASE) + periodic_alcove(BELOW).scale(QINV)
    assert m_c.leading() == leading_alcove_of_m_c(data_c11) == BASE


@pytest.mark.parametrize("fixture", ["data_c2", "data_c11"])
def test_both_expressions_of_m_c_agree(fixture, request):
    data = request.getfixturevalue(fixture)
    assert m_c_from_hecke(data) == build_m_c(data)


def test_t_acts_by_the_sign_on_the_slab_wall():
    v = periodic_alcove(BASE)
    assert act_t(1, v, (2,)) == v.scale(-QINV)
    assert act_t(2, v, (2,)) == v.scale(-QINV)
    assert act_t_inv(1, act_t(1, v, (2,)), (2,)) == v


def test_t_moves_between_alcoves():
    v = periodic_alcove(BASE)
    above = left_act(2, BASE)
    assert act_t(2, v, C11) == periodic_alcove(above)
    assert act_t(1, v, C11) == periodic_alcove(BELOW) + v.scale(Q - QINV)
    assert act_t(2, periodic_alcove(above), C11) == v + periodic_alcove(above).scale(Q - QINV)
    for i in (1, 2):
        assert act_t_inv(i, act_t(i, v, C11), C11) == v


def test_hecke_action(data_c11):
    v = periodic_alcove(BASE)
    assert act_hecke(t_simple(1, 2), v, C11) == act_t(1, v, C11)
    assert act_hecke(t_simple(1, 2) * t_simple(2, 2), v, C11) == act_t(1, act_t(2, v, C11), C11)
    with pytest.raises(AssertionError):
        act_hecke(pi(2), v, C11)


def test_raise_is_the_quantum_integer_on_m_c(data_c11):
    m_c = build_m_c(data_c11)
    assert raise_(1, m_c, C11) == m_c.scale(q_integer(2))


def test_right_action():
    v = periodic_alcove(BASE)
    moved = compose_alcove((0, 1), (1, -1), C11)
    assert act_coset(v, (1, -1), C11) == periodic_alcove(moved)
    assert height(moved) == -2
    assert act_x(v, (1, -1), C11) == periodic_alcove(moved)
    assert act_x(v, (1, -1), (2,)) == v
    with pytest.raises(AssertionError):
        act_x(v, (1, 0), C11)


def test_certify_entry():
    certify_entry(BASE, periodic_alcove(BASE) + periodic_alcove(BELOW).scale(QINV))
    with pytest.raises(ConventionError):
        certify_entry(BASE, periodic_alcove(BASE).scale(Q))
    with pytest.raises(ConventionError):
        certify_entry(BASE, periodic_alcove(BASE) + periodic_alcove(BELOW))
    with pytest.raises(ConventionError):
        certify_entry(BELOW, periodic_alcove(BELOW) + periodic_alcove(BASE).scale(QINV))


def test_canonical_basis_for_a_single_block(data_c2):
    table = canonical_basis(data_c2, Window(1))
    assert len(table) == 1
    assert table[BASE] == periodic_alcove(BASE)
    assert table.verified() == [BASE]


def test_canonical_basis_for_two_blocks(data_c11):
    search = CanonicalBasisSearch(data_c11, search_radius=0).run()
    assert len(search.classes) == 2
    above = left_act(2, BASE)
    assert search.entry_of(above) == periodic_alcove(above) + periodic_alcove(BASE).scale(QINV)

    table = search.table(Window(1))
    assert len(table) == 6
    for A in table.alcoves():
        vector = table[A]
        assert vector.coefficient(A) == ONE
        (D, f), = [(D, f) for D, f in vector.terms.items() if D != A]
        assert height(D) == height(A) - 1
        assert f == QINV
    assert len(table.verified()) == 6
    # the chain of d=2 alcoves: support plus one step up and down fits for the middle three only
    assert len(table.in_window()) == 3
    records = table.to_records()
    assert records[0]["verified"] is True and records[0]["in_window"] is False
    assert records[-1]["provenance"][-1][0] == "x"


def test_spanning_family(data_c11):
    family = spanning_family(data_c11, Window(1))
    assert len(family) == 6
    for member, A in family:
        assert member.leading() == A
        assert member.coefficient(A) == ONE


def test_iota_on_the_span(data_c11):
    search = CanonicalBasisSearch(data_c11).run()
    m_c = build_m_c(data_c11)
    assert iota_M_on_span(m_c, search.family()) == m_c
    image = iota_M_on_span(periodic_alcove(BASE), search.family(), depth=1)
    assert image == periodic_alcove(BASE) + periodic_alcove(BELOW).scale(QINV - Q)


def test_truncate_below(data_c11):
    m_c = build_m_c(data_c11)
    assert truncate_below(m_c, 0) == periodic_alcove(BASE)
    assert truncate_below(m_c, -1) == m_c


@pytest.mark.parametrize("p, c", [(3, (3,)), (3, (2, 1)), (3, (1, 1, 1)), (4, (1, 1, 1)), (5, (1, 1, 1))])
def test_canonical_basis_in_rank_three(p, c):
    data = dual_data(p, c)
    search = CanonicalBasisSearch(data).run()
    classes = {(3,): 1, (2, 1): 3, (1, 1, 1): 6}[c]
    assert len(search.classes) == classes
    table = search.table(Window(1))
    assert len(table.verified()) == len(table)
    for A in table.alcoves():
        vector = table[A]
        assert vector.coefficient(A) == ONE
        assert all(D == A or generic_less(D, A) for D in vector.terms)


@pytest.mark.slow
def test_canonical_basis_covers_a_wide_window():
    table = CanonicalBasisSearch(dual_data(3, (2, 1))).table(Window(4))
    assert len(table) == 27
    assert table.verified() == table.alcoves()
