import json
import os

import pytest

from perichain.lattice.alcove import Window
from perichain.lattice.rootdata import GlpWeight
from perichain.module.quotient import DEFAULT_TRI_DIRECTION, tensor_canonical_basis
from perichain.runner import Runner
from perichain.verifier.comparison import BasisComparisonVerifier


def run_json(capsys, argv):
    code = Runner.run(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_orders_suite_to_stdout(capsys):
    code, payload = run_json(capsys, ["--p", "3", "--c", "1,1", "--suite", "orders"])
    assert code == 1
    assert payload["meta"]["c"] == [1, 1]
    assert [row["status"] for row in payload["rows"]] == ["match", "mismatch"]


def test_invalid_partition(capsys):
    code, payload = run_json(capsys, ["--p", "3", "--c", "1,2"])
    assert code == 1
    assert payload is None


def test_degree_must_match_the_partition(capsys):
    code, _ = run_json(capsys, ["--p", "3", "--c", "1,1", "--d", "3", "--suite", "orders"])
    assert code == 1


def test_periodic_canonical_basis(capsys):
    code, payload = run_json(capsys, ["--command", "periodic_cb", "--p", "3", "--c", "2"])
    assert code == 0
    assert len(payload["rows"]) == 1
    assert payload["rows"][0]["verified"]


def test_tensor_canonical_basis(capsys):
    argv = ["--command", "tensor_cb", "--p", "3", "--c", "2", "--window", "0", "--tri_direction", "neg"]
    code, payload = run_json(capsys, argv + ["--mu", "1,1,0"])
    assert code == 0
    assert payload["meta"]["mu"] == [1, 1, 0]
    assert len(payload["rows"]) == 1
    assert payload["rows"][0]["index"] == {"residues": [2, 1], "coset": [0]}

    code, payload = run_json(capsys, argv)
    assert code == 1


def test_command_line_overrides_the_config(capsys, tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("suite: orders\nwindow: 5\np: 3\nc: !tuple (1, 1)\n")
    code, payload = run_json(capsys, ["--config", str(config), "--window", "1"])
    assert code == 1
    assert payload["meta"]["window"] == 1
    assert payload["meta"]["suite"] == "orders"
    assert payload["meta"]["c"] == [1, 1]


def test_unknown_config_key(tmp_path):
    config = tmp_path / "run.yaml"
    config.write_text("p: 3\nc: !tuple (2,)\nwindows: 1\n")
    with pytest.raises(AssertionError):
        Runner.run(["--config", str(config)])


def test_output_folder(tmp_path):
    argv = ["--p", "3", "--c", "1,1", "--suite", "aperiodic", "--offset_bound", "2", "--format", "csv",
            "--output_path", str(tmp_path), "--log_path", str(tmp_path), "--console", "false"]
    assert Runner.run(argv) == 0
    assert os.path.exists(tmp_path / "verify.csv")
    assert os.path.exists(tmp_path / "perichain.log")
    with open(tmp_path / "report.md", encoding="utf-8") as f:
        assert "**match:** 18" in f.read()


def test_suites_needing_a_larger_rank_are_skipped(capsys):
    code, payload = run_json(capsys, ["--p", "2", "--c", "1,1", "--suite", "cyclic"])
    assert code == 0
    assert payload["rows"] == []


def test_relations_suite_from_a_config(capsys, tmp_path):
    config = tmp_path / "relations.yaml"
    config.write_text("p: 3\nc: !tuple (2,)\nsuite: relations\nsuite_conf:\n  relations:\n    instances: 30\n"
                      "    commutation_samples: 2\n    max_d: 3\n    max_p: 3\n")
    code, payload = run_json(capsys, ["--config", str(config)])
    assert code == 0
    claims = {row["claim"] for row in payload["rows"]}
    assert "hecke_relations" in claims and "bimodule_commutation" in claims


def test_every_tri_direction_default_is_shared(data_c2):
    assert Runner.parse([]).tri_direction == DEFAULT_TRI_DIRECTION == "pos"
    assert BasisComparisonVerifier().tri_direction == DEFAULT_TRI_DIRECTION
    table = tensor_canonical_basis(data_c2, GlpWeight((1, 1, 0), 0), Window(0))
    assert table.tri_direction == DEFAULT_TRI_DIRECTION
