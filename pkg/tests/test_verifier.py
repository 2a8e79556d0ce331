import pytest

from perichain.algebra.hecke import t
from perichain.algebra.laurent import Q, QINV
from perichain.lattice.alcove import Window, alcove_of, base_alcove
from perichain.lattice.rootdata import GlpWeight, dual_data
from perichain.lattice.weyl import identity, level_p_action, simple
from perichain.module.quotient import TensorBasisIndex, build_quotient
from perichain.module.tensor import TensorVector, hecke_right_act
from perichain.verifier.abs import count_statuses
from perichain.verifier.aperiodic import AperiodicVerifier
from perichain.verifier.comparison import BasisComparisonVerifier, normalised, tensor_index_of
from perichain.verifier.cyclic import CyclicVectorVerifier
from perichain.verifier.induced import (
    InducedModuleVerifier,
    dominant_of_composition,
    elements_up_to,
    is_min_in_right_coset,
)
from perichain.verifier.orders import OrderComparisonVerifier

MU_TILDE = GlpWeight((1, 1, 0), 0)


def test_record_checks_the_status():
    verifier = OrderComparisonVerifier()
    with pytest.raises(AssertionError):
        verifier.record({}, "maybe")
    assert count_statuses([verifier.record({}, "match"), verifier.record({}, "indeterminate")]) == \
        {"match": 1, "mismatch": 0, "indeterminate": 1}


def test_orders_are_incomparable():
    report = OrderComparisonVerifier()()
    assert [rec["instance"]["case"] for rec in report] == ["a", "b"]
    assert all(rec["claim"] == "order_incomparability" for rec in report)
    case_a, case_b = report
    assert case_a["status"] == "match"
    assert case_b["witness"]["checks"] == dict(tensor=False, not_generic=False, not_dominant=True)
    assert case_b["status"] == "mismatch"
    assert case_b["witness"]["reversed_tensor"]
    assert not case_a["witness"]["reversed_tensor"]


def test_aperiodic_verifier():
    report = AperiodicVerifier(offset_bound=2)(p=2, d=2)
    assert len(report) == 3
    assert count_statuses(report)["match"] == 3
    assert report[0]["instance"]["p"] == 2


def test_elements_up_to():
    assert elements_up_to(2, 1) == [identity(2), simple(2, 2), simple(1, 2)]
    assert len(elements_up_to(2, 2)) == 5
    assert not is_min_in_right_coset(simple(1, 2), (2,))
    assert is_min_in_right_coset(simple(1, 2), (1, 1))
    assert dominant_of_composition((0, 1, 1)) == (2, 1)


def test_affine_reflection_scales_the_dominant_tensor():
    # t_2 = pi t_1 pi^-1 and u_(1,1) . t_1 = q u_(1,1) force the factor q^-1
    image = hecke_right_act(TensorVector.basis((1, 1)), t(simple(2, 2)), 3)
    assert level_p_action((1, 1), simple(2, 2), 3) == (4, -2)
    assert image == TensorVector.basis((4, -2)).scale(QINV)


def test_basis_action_reports_affine_failures(data_c2):
    report = InducedModuleVerifier(max_length=3).check_basis_action(data_c2)
    assert all(rec["witness"]["finite_failures"] == [] for rec in report)
    assert all(rec["status"] == ("mismatch" if rec["witness"]["affine_failures"] else "match") for rec in report)
    assert count_statuses(report)["indeterminate"] == 0
    (rank_one,) = [rec for rec in report if rec["instance"]["mu"] == [1, 1]]
    assert rank_one["status"] == "mismatch"
    assert rank_one["witness"]["affine_failures"][0]["w"] == simple(2, 2).to_record()
    assert rank_one["witness"]["affine_failures"][0]["scalar"] == repr(QINV)


def test_basis_action_is_exact_on_finite_elements():
    report = InducedModuleVerifier(max_length=3).check_basis_action(dual_data(4, (2, 1)))
    assert len(report) > 0
    assert all(rec["witness"]["finite_failures"] == [] for rec in report)
    assert all(rec["witness"]["checked"] > 0 for rec in report)


def test_slab_decomposition_and_m_c(data_c2, data_c11):
    verifier = InducedModuleVerifier()
    for data in (data_c2, data_c11):
        assert verifier.check_decomposition(data, Window(1))["status"] == "match"
        rec = verifier.check_m_c(data)
        assert rec["status"] == "match"
        assert rec["claim"] == "slab_decomposition"


@pytest.mark.slow
def test_comparison_maps(data_c11):
    report = InducedModuleVerifier().check_maps(data_c11, Window(1))
    assert len(report) == 3
    assert all(rec["status"] == "match" for rec in report)


def test_cyclic_vector(data_c2, data_c11):
    verifier = CyclicVectorVerifier()
    for data in (data_c2, data_c11):
        assert verifier.check_cyclic(build_quotient(data))["status"] == "match"


def test_tensor_index_of(data_c11):
    space = build_quotient(data_c11)
    assert tensor_index_of(space, MU_TILDE, base_alcove(2)) == (TensorBasisIndex((2, 1), (0, 0)), 1)
    assert tensor_index_of(space, MU_TILDE, alcove_of((1, 0))) == (TensorBasisIndex((1, 2), (0, 0)), 1)


def test_normalised(data_c11):
    space = build_quotient(data_c11)
    index = TensorBasisIndex((2, 1), (0, 0))
    x = space.basis_vector(index) + space.basis_vector(TensorBasisIndex((1, 2), (0, 0))).scale(Q)
    assert normalised(x, index) == x
    assert normalised(-x, index) == x
    assert normalised(x.scale(Q), index) is None


def test_comparison_rejects_unknown_directions():
    with pytest.raises(AssertionError):
        BasisComparisonVerifier(tri_direction="up")



@pytest.mark.parametrize("p", [4, 5])
@pytest.mark.parametrize("c", [(3,), (2, 1), (1, 1, 1)])
def test_cyclic_vector_in_rank_three(p, c):
    assert CyclicVectorVerifier().check_cyclic(build_quotient(dual_data(p, c)))["status"] == "match"


@pytest.mark.slow
@pytest.mark.parametrize("p", [4, 5])
def test_small_weights_of_a_single_block(p):
    report = CyclicVectorVerifier(family_word_length=3)(dual_data(p, (3,)), Window(0))
    assert count_statuses(report)["mismatch"] == 0
    weights = [rec for rec in report if rec["instance"]["part"] == "weights"]
    assert len(weights) == 1 and weights[0]["status"] == "match"


def test_basis_comparison_matches(data_c11):
    report = BasisComparisonVerifier()(data_c11, Window(1))
    counts = count_statuses(report)
    assert counts["match"] > 0
    assert counts["mismatch"] == 0
    assert all(rec["instance"]["tri_direction"] == "pos" for rec in report if "tri_direction" in rec["instance"])
