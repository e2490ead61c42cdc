import json

import pytest

from coloredhomfly.kauffman import FIGURE_EIGHT, LEFT_TREFOIL
from coloredhomfly.laurent import LaurentPoly1
from coloredhomfly.verify import (
    SUITES,
    NoConventionMatches,
    UnknownSuite,
    alexander_twist,
    resolve_jones_convention,
    run_suite,
)

REQUIRED = {
    "eigen-proposition",
    "lambda-triangle",
    "two-way-T",
    "p-pm1-collapse",
    "boundary-brackets",
    "sigma-expansion",
    "determinant-formula",
    "theta-vanishing",
    "bracket-D",
    "double-vs-single-sum",
    "polynomiality",
    "amphichirality",
    "jones-anchor",
    "unknot",
    "qbinomial-symmetry",
    "qbinomial-pascal",
    "brace-fall-vanishing",
    "dmn-transformation",
    "tau-raw",
    "beta-symmetry",
}


def test_registry_covers_required_suites():
    assert REQUIRED <= set(SUITES)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_at_small_range(name):
    s = SUITES[name]
    small = {k: min(v, 3) for k, v in s.defaults.items()}
    report = run_suite(name, **small)
    assert report.passed, report.counterexample
    assert report.checked > 0


def test_spec_examples():
    assert run_suite("eigen-proposition", max_n=12).passed
    assert run_suite("two-way-T", max_n=5, max_p=3).passed
    r = run_suite("theta-vanishing", max_n=6)
    assert r.passed and r.checked == sum(2 * n + 2 for n in range(7))


def test_report_json():
    r = run_suite("qbinomial-symmetry", max_n=4)
    blob = json.loads(json.dumps(r.to_json()))
    assert set(blob) == {"name", "range", "checked", "passed", "millis"}
    assert blob["range"] == {"max_n": 4}
    assert blob["checked"] == 15


def test_unknown_suite_and_range():
    with pytest.raises(UnknownSuite):
        run_suite("no-such-suite")
    with pytest.raises(TypeError):
        run_suite("eigen-proposition", max_p=2)


def test_counterexample_is_reported(monkeypatch):
    from coloredhomfly import verify

    def broken(max_n):
        for n in range(max_n + 1):
            yield {"n": n}, LaurentPoly1({n: 1}), LaurentPoly1({0: 1})

    monkeypatch.setitem(SUITES, "broken", verify.IdentitySuite("broken", "", {"max_n": 3}, broken))
    r = run_suite("broken")
    assert not r.passed
    assert r.checked == 2
    assert r.counterexample == {"params": {"n": 1}, "lhs": "q", "rhs": "1"}


def test_convention_resolves_uniquely():
    report = resolve_jones_convention()
    assert report.matching == ("t=q^-2",)
    assert report.convention == "t=q^-2"


def test_figure_eight_alone_is_ambiguous():
    report = resolve_jones_convention({"figure_eight": (-1, FIGURE_EIGHT)})
    assert set(report.matching) == {"t=q^2", "t=q^-2"}
    assert report.convention is None


def test_no_convention_paths():
    with pytest.raises(NoConventionMatches):
        resolve_jones_convention({})
    # pairing the trefoil diagram with the figure-eight invariant cannot match
    with pytest.raises(NoConventionMatches):
        resolve_jones_convention({"mismatch": (-1, LEFT_TREFOIL)})


def test_alexander_from_seifert_matrix():
    assert alexander_twist(0) == LaurentPoly1({0: 1}, "t")
    assert alexander_twist(1) == LaurentPoly1.parse("t - 1 + t^-1", "t")
    assert alexander_twist(-1) == LaurentPoly1.parse("-t + 3 - t^-1", "t")
