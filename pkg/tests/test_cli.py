import json
import subprocess
import sys

import pytest

from coloredhomfly.cli import main, parse_range, UsageError
from coloredhomfly.invariants import colored_homfly_twist
from coloredhomfly.laurent import LaurentPoly1, LaurentPoly2, parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_twist_examples(capsys):
    code, out, _ = run(capsys, "twist", "--p", "-1", "--n", "1")
    assert code == 0
    assert out == "a^2 - q^2 + 1 - q^-2 + a^-2"
    assert parse_poly(out) == parse_poly("a^2 + a^-2 + 1 - q^2 - q^-2")
    assert run(capsys, "twist", "--p", "0", "--n", "5")[1] == "1"
    assert run(capsys, "twist", "--p", "1", "--n", "0")[1] == "1"


def test_jones_example(capsys):
    code, out, _ = run(capsys, "jones", "--p", "-1", "--n", "1")
    assert code == 0
    assert LaurentPoly1.parse(out) == LaurentPoly1.parse("q^4 + q^-4 - q^2 - q^-2 + 1")
    code, out, _ = run(capsys, "jones", "--p", "1", "--n", "1", "--N", "3")
    assert LaurentPoly1.parse(out) == colored_homfly_twist(1, 1).substitute_a(3)


def test_twist_json_round_trip(capsys):
    code, out, _ = run(capsys, "twist", "--p=2", "--n", "2", "--format", "json")
    blob = json.loads(out)
    assert blob["knot"] == {"type": "twist", "p": 2}
    assert blob["color"] == 2
    assert all(set(t) == {"a", "q", "c"} and isinstance(t["c"], str) for t in blob["terms"])
    assert LaurentPoly2.from_json_terms(blob["terms"]) == colored_homfly_twist(2, 2)


def test_output_is_deterministic(capsys):
    first = run(capsys, "twist", "--p", "-2", "--n", "3", "--format", "json")[1]
    colored_homfly_twist.cache_clear()
    assert run(capsys, "twist", "--p", "-2", "--n", "3", "--format", "json")[1] == first


def test_table_file(capsys, tmp_path):
    path = tmp_path / "t.json"
    code, out, _ = run(capsys, "table", "--p", "-2..2", "--n", "0..4", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    entries = json.loads(path.read_text())
    assert len(entries) == 25
    assert {(e["knot"]["p"], e["color"]) for e in entries} == {(p, n) for p in range(-2, 3) for n in range(5)}


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--p", "-1..1", "--n", "1")
    assert out.splitlines()[0] == "p=-1 n=1: a^2 - q^2 + 1 - q^-2 + a^-2"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "eigen-proposition", "--max-n", "4")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from coloredhomfly import verify

    def broken():
        yield {}, 1, 2

    monkeypatch.setitem(verify.SUITES, "broken", verify.IdentitySuite("broken", "", {}, broken))
    code, out, _ = run(capsys, "verify", "--suite", "broken")
    assert code == 1
    assert json.loads(out)["counterexample"]["lhs"] == "1"


@pytest.mark.parametrize(
    "argv",
    [
        ["twist", "--p", "1", "--n", "-1"],
        ["twist", "--p", "1"],
        ["twist", "--p", "x", "--n", "1"],
        ["twist", "--p", "1..2", "--n", "1"],
        ["jones", "--p", "1", "--n", "1", "--N", "1"],
        ["table", "--p", "2..1", "--n", "1"],
        ["verify", "--suite", "no-such-suite"],
        ["verify", "--max-n", "0"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_internal_error_exit_code(capsys, monkeypatch):
    from coloredhomfly import cli
    from coloredhomfly.laurent import NotDivisible

    def boom(n, p):
        raise NotDivisible("did not cancel")

    monkeypatch.setattr(cli, "colored_homfly_twist", boom)
    code, _, err = run(capsys, "twist", "--p", "1", "--n", "1")
    assert code == 3
    assert "did not cancel" in err


def test_parse_range():
    assert parse_range("3") == (3,)
    assert parse_range("-2..2") == (-2, -1, 0, 1, 2)
    with pytest.raises(UsageError):
        parse_range("1..")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coloredhomfly", "twist", "--p", "-1", "--n", "1"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == "a^2 - q^2 + 1 - q^-2 + a^-2\n"
