import random

import pytest

from perichain.lattice.weyl import length
from perichain.module.tensor import pure_tensor
from perichain.verifier.abs import count_statuses
from perichain.verifier.relations import (
    RelationsVerifier,
    cartan_entry,
    hecke_relations,
    quantum_relations,
    random_left_factor,
    random_tensor,
    weight_pairing,
)


@pytest.mark.parametrize("a, b, p, entry", [
    (1, 1, 3, 2), (1, 2, 3, -1), (3, 1, 3, -1), (1, 3, 3, -1), (1, 3, 4, 0), (1, 2, 2, -2),
])
def test_cartan_entry(a, b, p, entry):
    assert cartan_entry(a, b, p) == entry


@pytest.mark.parametrize("a, b, pairing", [(1, 1, 1), (2, 1, -1), (1, 3, -1), (3, 3, 1), (2, 3, 0)])
def test_weight_pairing(a, b, pairing):
    assert weight_pairing(a, b, 3) == pairing


@pytest.mark.parametrize("d", [2, 3])
def test_hecke_relations_hold(d):
    names = set()
    for name, lhs, rhs in hecke_relations(d):
        assert lhs == rhs, name
        names.add(name.split()[0])
    assert {"quadratic", "pi", "commute"} <= names
    assert ("braid" in names) == (d >= 3)


def test_quantum_relations_hold_on_a_basis_vector():
    v = pure_tensor((1, 2, 3))
    for name, lhs, rhs in quantum_relations(3):
        assert lhs(v) == rhs(v), name


def test_random_instances_are_seeded():
    first, second = random.Random(7), random.Random(7)
    assert random_tensor(first, 3, 4) == random_tensor(second, 3, 4)
    assert random_left_factor(first, 3) == random_left_factor(second, 3)
    assert len(random_left_factor(random.Random(0), 2).terms) == 1
    assert all(length(w) == 0 for w in random_left_factor(random.Random(0), 2, max_length=0).terms)


def test_relations_verifier():
    verifier = RelationsVerifier(instances=40, commutation_samples=3, max_d=3, max_p=3)
    report = verifier()
    assert count_statuses(report)["match"] == len(report)
    assert {rec["claim"] for rec in report} == \
        {"hecke_relations", "quantum_relations", "parabolic_identities", "bimodule_commutation"}
    hecke = [rec for rec in report if rec["claim"] == "hecke_relations"]
    assert sum(rec["instance"]["instances"] for rec in hecke) == 40
    parabolic = [rec for rec in report if rec["claim"] == "parabolic_identities"]
    assert len(parabolic) == 1 + 2 + 4
    assert report == verifier()


@pytest.mark.slow
def test_relations_verifier_on_the_full_range():
    report = RelationsVerifier()()
    assert count_statuses(report) == {"match": len(report), "mismatch": 0, "indeterminate": 0}
    assert sum(rec["instance"]["instances"] for rec in report if rec["claim"] == "quantum_relations") == 1000
