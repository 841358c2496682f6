# test/test_cli.py

import json

import pytest

from csformula.cli import run
from csformula.roots.catalog import catalog_names
from csformula.verify import sweeps
from csformula.whittaker import cs_value


def run_json(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


def test_datum_list(capsys):
    code, payload = run_json(capsys, "datum", "--list")
    assert code == 0
    assert payload["catalog"] == catalog_names()


def test_hecke_normal_form_text(capsys):
    code = run(["hecke", "normal-form", "T[s1]*T[s1]", "--datum", "catalog:A1-adjoint", "--format", "text"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "(q(s1)-1)*T[s1] + q(s1)"


def test_cs_eval_matches_library(capsys, a1):
    code, payload = run_json(capsys, "cs", "eval", "--datum", "catalog:A1-adjoint", "--mu", "3")
    assert code == 0
    expected = cs_value(a1, (3,))
    assert payload["text"] == str(expected)
    assert {k: v for k, v in payload.items() if k != "text"} == json.loads(json.dumps(expected.to_json()))


def test_cs_specialize(capsys):
    code, payload = run_json(
        capsys, "cs", "specialize", "--datum", "catalog:A1-adjoint", "--lambda", "2", "--point", "2", "--q", "9/4"
    )
    assert code == 0
    assert payload["v"] == "3/2"
    assert payload["value"] == "7/3"


def test_verify_recursion_passes(capsys):
    code, payload = run_json(
        capsys, "verify", "recursion", "--datum", "catalog:A2-adjoint",
        "--box", "4", "--lambda-max", "2", "--no-timings",
    )
    assert code == 0
    assert payload["failures"] == []
    assert payload["elapsed_ms"] == 0


def test_verify_uniqueness_on_sl3(capsys):
    code, payload = run_json(capsys, "verify", "uniqueness", "--datum", "catalog:A2-sc", "--no-timings")
    assert code == 0
    assert payload["failures"] == []


def test_failed_check_exits_with_one(capsys, monkeypatch):
    monkeypatch.setattr(sweeps, "_uniqueness_lambdas", lambda datum, lambda_max: [(1, 1), (2, 2)])
    code, payload = run_json(
        capsys, "verify", "uniqueness", "--datum", "catalog:A2-sc", "--box", "4", "--no-timings"
    )
    assert code == 1
    assert payload["failures"][0]["nullity"] > 1


def test_repeated_runs_are_byte_identical(capsys):
    argv = ["verify", "savin", "--datum", "catalog:A1-adjoint", "--no-timings"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["cs", "eval", "--mu", "x,1"],
        ["cs", "eval", "--datum", "catalog:A1-adjoint", "--mu", "0"],
        ["cs", "o-eval", "--datum", "catalog:A1-sc", "--lambda", "1"],
        ["char", "--datum", "catalog:no-such-datum", "--lambda", "1"],
        ["cs", "specialize", "--datum", "catalog:A1-adjoint", "--mu", "1", "--point", "2", "--q", "2"],
        ["hecke", "normal-form", "T[s1] +", "--datum", "catalog:A1-adjoint"],
    ],
)
def test_bad_input_exits_with_usage_code(capsys, argv):
    assert run(argv) == 2
    assert capsys.readouterr().out == ""


def main():
    raise SystemExit(pytest.main([__file__]))


if __name__ == "__main__":
    main()
