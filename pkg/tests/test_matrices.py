import pytest

from perichain.bridge.matrices import (
    PeriodicMatrix,
    check_claim,
    claim_records,
    count_by_columns,
    enumerate_A_ff,
    is_aperiodic,
    non_aperiodic_matrices,
    non_aperiodic_offset,
    s_r,
    verify_aperiodic_claim,
)


def test_periodic_matrix():
    m = s_r(1, 2, 2)
    assert m.entry(1, 2) == 1
    assert m.entry(3, 4) == 1
    assert m.entry(0, 1) == 1
    assert m.entry(1, 1) == 0
    assert m.entry(1, 9) == 0
    assert m.d == 2
    assert m.row_sums() == (1, 1)
    assert m.column_sums() == (1, 1)
    assert m.diagonal(1) == (1, 1)
    assert m.diagonal(5) == (0, 0)
    assert m.support_offsets() == [1]
    assert m.to_record() == {"p": 2, "entries": [[1, 2, 1], [2, 3, 1]]}


def test_periodic_matrix_checks_its_shape():
    with pytest.raises(AssertionError):
        PeriodicMatrix(2, 1, ((0, 1, 0),))
    with pytest.raises(AssertionError):
        PeriodicMatrix(1, 1, ((0, -1, 0),))


def test_column_sums_wrap_around():
    m = PeriodicMatrix(3, 1, ((1, 0, 0), (0, 0, 2), (0, 1, 0)))
    assert m.row_sums() == (1, 2, 1)
    # s_10 lands in column 3, s_23 in column 3, s_33 in column 3
    assert m.column_sums() == (0, 0, 4)


def test_aperiodicity():
    assert not is_aperiodic(s_r(1, 3, 3))
    assert is_aperiodic(s_r(0, 3, 3))
    assert non_aperiodic_offset(s_r(-2, 2, 2)) == -2
    assert non_aperiodic_offset(s_r(0, 2, 2)) is None
    assert is_aperiodic(PeriodicMatrix(2, 1, ((0, 1, 0), (0, 0, 1))))


def test_counting_matches_enumeration():
    counts = count_by_columns((1, 1), 2, 2)
    assert counts[(1, 1)] == 13
    assert counts[(2, 0)] == counts[(0, 2)] == 6
    assert sum(counts.values()) == 25
    assert len(enumerate_A_ff((1, 1), (1, 1), 2, 2, 2)) == 13
    assert all(m.row_sums() == (1, 1) for m in enumerate_A_ff((1, 1), (2, 0), 2, 2, 2))
    with pytest.raises(AssertionError):
        enumerate_A_ff((1, 1), (1, 1), 2, 2, 1)


def test_non_aperiodic_matrices():
    found = non_aperiodic_matrices((1, 1), (1, 1), 2, 2)
    assert sorted(non_aperiodic_offset(m) for m in found) == [-2, -1, 1, 2]
    assert non_aperiodic_matrices((1, 1), (2, 0), 2, 2) == []
    assert non_aperiodic_matrices((1, 0, 1), (1, 0, 1), 3, 2) == []


def test_claim_for_p_equal_to_d():
    verdicts = verify_aperiodic_claim(2, 2, 2)
    assert len(verdicts) == 3
    assert all(v["status"] == "match" for v in verdicts)
    (small,) = [v for v in verdicts if v["f_prime"] == [1, 1]]
    assert small["witness"]["offsets"] == [-2, -1, 1, 2]
    assert small["witness"]["size"] == 13


def test_claim_for_p_above_d():
    verdicts = verify_aperiodic_claim(3, 2, 2)
    assert len(verdicts) == 18
    assert all(v["status"] == "match" for v in verdicts)
    assert all(not v["witness"]["non_aperiodic"] for v in verdicts)


def test_check_claim_flags_a_missing_witness():
    records = claim_records(2, 2, 2)
    for rec in records:
        rec.non_aperiodic = []
    verdicts = check_claim(records, 2, 2, 2)
    assert [v["status"] for v in verdicts if v["f_prime"] == [1, 1]] == ["mismatch"]


def test_claim_needs_p_at_least_d():
    with pytest.raises(AssertionError):
        verify_aperiodic_claim(2, 3)
