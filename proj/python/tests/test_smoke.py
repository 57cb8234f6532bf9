import json
import os
from pathlib import Path

import pytest

import twistbrack

DATA = Path(os.environ.get("TWISTBRACK_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
SESSION = DATA / "transvection_p3.json"


@pytest.fixture(scope="module")
def session():
    return twistbrack.load(SESSION)


def test_load(session):
    assert session.p == 3
    assert session.group_order == 3
    assert session.variables == ["v", "w"]
    assert session.cochain_names == ["delta", "kappa", "lambda"]


def test_round_trip(session):
    canonical = json.loads(session.to_json())
    assert json.loads(twistbrack.parse(canonical).to_json()) == canonical


def test_check(session):
    assert twistbrack.check(session, "kappa")["passed"]
    delta = twistbrack.check(session, "delta")
    assert not delta["passed"]
    assert len(delta["outputs"]["coboundary"]["entries"]) == 2


def test_bracket(session):
    result = twistbrack.bracket(session, "lambda", "lambda", class_compare_with="zero")
    assert result["passed"]
    assert result["outputs"]["class_comparison"]["equal"]
    assert twistbrack.bracket(session, "delta", "delta")["outputs"]["bracket"]["entries"] == []


def test_demo():
    claims = {c["id"]: c["passed"] for c in twistbrack.demo_transvection(3)["outputs"]["claims"]}
    assert claims["lambda_cocycle"] and claims["kappa_cocycle"]
    assert claims["lambda_lambda"] and claims["lambda_kappa"]


def test_selfcheck(session):
    assert twistbrack.selfcheck(session, hdeg=1, ideg=1, trials=3)["passed"]


def test_errors(session):
    with pytest.raises(twistbrack.Error) as info:
        twistbrack.check(session, "nope")
    assert info.value.args[0] == "UnknownName"
    with pytest.raises(twistbrack.Error) as info:
        twistbrack.demo_transvection(4)
    assert info.value.args[0] == "NonPrimeModulus"
    bad = json.loads(session.to_json())
    bad["group_generators"] = [[[1, 0], [0, 0]]]
    with pytest.raises(twistbrack.Error) as info:
        twistbrack.parse(bad)
    assert info.value.args[0] == "NonInvertibleGenerator"
