import io
import json
import os

import pytest

from perichain.lattice.rootdata import GlpWeight
from perichain.utilbox.import_util import import_class, parse_path_args
from perichain.utilbox.log_util import elapsed_summary, has_console, logger_stdout_file
from perichain.utilbox.md_util import save_md_report
from perichain.utilbox.report_util import serialize, terms_to_latex
from perichain.utilbox.type_util import str2bool, str2glp_weight, str2list, str2none, str2tuple
from perichain.utilbox.yaml_util import load_yaml
from perichain.verifier.orders import OrderComparisonVerifier


def test_str2bool_and_str2none():
    assert str2bool("Yes") is True
    assert str2bool("0") is False
    with pytest.raises(ValueError):
        str2bool("maybe")
    assert str2none("None") is None
    assert str2none("") is None
    assert str2none("exp") == "exp"


@pytest.mark.parametrize("text, expected", [
    ("1,-2,3", [1, -2, 3]),
    ("", []),
    ("true,abc", [True, "abc"]),
    ("[1,[2,3],[4,[5,6]]]", [1, [2, 3], [4, [5, 6]]]),
    ("[]", []),
])
def test_str2list(text, expected):
    assert str2list(text) == expected


def test_str2tuple():
    assert str2tuple("2,1") == (2, 1)
    assert str2tuple("2") == (2,)
    assert str2tuple("1, -1, 0") == (1, -1, 0)
    with pytest.raises(AssertionError):
        str2tuple("a,1")
    with pytest.raises(AssertionError):
        str2tuple("true")


def test_str2glp_weight():
    assert str2glp_weight("1,1,0") == GlpWeight((1, 1, 0), 0)
    assert str2glp_weight("1,1,0+2d") == GlpWeight((1, 1, 0), 2)
    assert str2glp_weight("0,1+-1d") == GlpWeight((0, 1), -1)
    with pytest.raises(AssertionError):
        str2glp_weight("e1+e2")


def test_load_yaml_resolves_representers():
    text = (
        "p: 3\n"
        "c: !tuple (2, 1)\n"
        "single: !tuple (2,)\n"
        "mu: !list [1, -1, 0]\n"
        "name: !str 0123\n"
        "root: exp\n"
        "out: !ref <root>/table\n"
        "same: !ref <p>\n"
    )
    assert load_yaml(io.StringIO(text)) == {
        "p": 3, "c": (2, 1), "single": (2,), "mu": [1, -1, 0], "name": "0123", "root": "exp",
        "out": "exp/table", "same": 3,
    }
    assert load_yaml(io.StringIO("")) == {}


def test_load_yaml_from_a_path(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("window: 2\nsuite_conf:\n  induced:\n    max_length: 3\n")
    assert load_yaml(str(path)) == {"window": 2, "suite_conf": {"induced": {"max_length": 3}}}
    with pytest.raises(AssertionError):
        load_yaml(str(tmp_path / "missing.yaml"))


def test_serialize():
    payload = {"meta": {"p": 3}, "rows": [{"b": [1, 2], "a": "x"}]}
    assert json.loads(serialize(payload, "json")) == payload
    assert serialize(payload, "csv").splitlines() == ["a,b", 'x,"[1, 2]"']
    latex = serialize({"meta": {}, "rows": [{"terms": [[[2, 1], [[-1, 1]]]], "verified": True}]}, "latex")
    assert "\\begin{tabular}" in latex
    assert "q^{-1}" in latex
    with pytest.raises(AssertionError):
        serialize(payload, "xml")


def test_terms_to_latex():
    assert terms_to_latex([]) == "0"
    assert terms_to_latex([[[2, 1], [[0, 1], [2, -1]]]]) == "$(1 - q^{2})$\\,[2, 1]"


def test_save_md_report(tmp_path):
    records = [
        dict(claim="orders", instance={"case": "a"}, status="match", witness=None),
        dict(claim="orders", instance={"case": "b"}, status="mismatch", witness=None),
    ]
    path = save_md_report(records, str(tmp_path))
    assert path == os.path.join(str(tmp_path), "report.md")
    with open(path, encoding="utf-8") as f:
        text = f.read()
    assert "**mismatch:** 1" in text
    assert "# Findings" in text


def test_logger(tmp_path):
    logger = logger_stdout_file(str(tmp_path), "run")
    logger.info("first")
    assert os.path.exists(tmp_path / "run.log")
    assert not has_console(logger)
    logger_stdout_file(str(tmp_path), "run")
    assert os.path.exists(tmp_path / "run1.log")
    assert has_console(logger_stdout_file(console=True))
    assert elapsed_summary({"verify": 1.0}) == "    verify: 1 second"


def test_import_class():
    assert import_class("perichain.verifier.orders.OrderComparisonVerifier") is OrderComparisonVerifier


def test_parse_path_args(monkeypatch):
    assert parse_path_args("/abs/path") == "/abs/path"
    assert parse_path_args("./exp") == os.path.abspath("./exp")
    monkeypatch.setenv("PERICHAIN_ROOT", "/opt/perichain")
    assert parse_path_args("config/run.yaml") == "/opt/perichain/config/run.yaml"
    monkeypatch.delenv("PERICHAIN_ROOT")
    with pytest.raises(AssertionError):
        parse_path_args("config/run.yaml")
