import json
import pathlib

import jsonschema
import pytest

import tautcalc

SCHEMA = json.loads(
    (pathlib.Path(__file__).resolve().parents[2] / "schemas" / "report.schema.json").read_text()
)


def test_d_op_on_p2_squared():
    assert tautcalc.d_op("p2^2") == "2*p2*q1 - 6*p3"
    assert tautcalc.d_op("p2^2", times=2) == "2*q1^2 - 8*q2"


def test_normalize_round_trips():
    w = tautcalc.normalize("2*(q1^2 - (2*g - 2)*q2)")
    assert w == "2*q1^2 + (4 - 4*g)*q2"
    assert tautcalc.normalize(w) == w


@pytest.mark.parametrize("text", ["q0", "2*(p1", "p1^x", "2p1"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        tautcalc.normalize(text)


@pytest.mark.parametrize("genus,status", [(2, "DERIVED_ZERO"), (3, "DERIVED_ZERO"), (4, "NOT_DERIVED")])
def test_check_w(genus, status, monkeypatch):
    monkeypatch.delenv("TAUT_MAX_CODIM", raising=False)
    got, text = tautcalc.check_w(genus)
    assert got == status
    jsonschema.validate(json.loads(text), SCHEMA)


def test_degeneration_and_pullback():
    passed, text = tautcalc.degeneration_check(5)
    assert passed
    kernel = json.loads(text)["certificates"]["kernel"]
    assert kernel["hypothesis"]["verified"] is False
    passed, _ = tautcalc.pullback_verify()
    assert passed


def test_run_exit_codes():
    assert tautcalc.run(["bogus"])[0] == 2
    code, rep = tautcalc.report("check-w", "--genus", "5")
    assert code == 1 and rep["status"] == "NOT_DERIVED"
    jsonschema.validate(rep, SCHEMA)
