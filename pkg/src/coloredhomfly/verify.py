"""Exhaustive identity checks over small integer parameter grids.

Each suite yields ``(params, lhs, rhs)`` cases; a run stops at the first
mismatch and reports both sides verbatim.  Ranges are keyword arguments
(``max_n``, ``max_p``, ...) with per-suite defaults.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from . import coefficients as C
from . import invariants as I
from .kauffman import FIGURE_EIGHT, LEFT_TREFOIL, UNKNOT, jones_in_t, kauffman_bracket
from .laurent import LaurentPoly1, LaurentPoly2, NotDivisible, QFactor, QRational
from .qsymbols import (
    braceA,
    braceA_fall_factors,
    brace,
    brace_factorial_factors,
    brace_fall,
    brace_fall_factors,
    qbinomial,
    qbinomial_poly,
)

__all__ = [
    "UnknownSuite",
    "NoConventionMatches",
    "IdentitySuite",
    "IdentityReport",
    "ConventionReport",
    "SUITES",
    "suite_names",
    "run_suite",
    "run_all",
    "resolve_jones_convention",
    "alexander_twist",
]

ZERO = LaurentPoly2()


class UnknownSuite(KeyError):
    pass


class NoConventionMatches(RuntimeError):
    pass


@dataclass(frozen=True)
class IdentitySuite:
    name: str
    description: str
    defaults: dict
    cases: Callable[..., Iterator[tuple[dict, object, object]]]


@dataclass
class IdentityReport:
    name: str
    range: dict
    checked: int
    passed: bool
    counterexample: dict | None = None
    millis: float = 0.0

    def to_json(self) -> dict:
        out = asdict(self)
        if out["counterexample"] is None:
            del out["counterexample"]
        out["millis"] = round(self.millis, 3)
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        rng = ", ".join(f"{k}={v}" for k, v in self.range.items())
        return f"{status} {self.name} [{rng}] checked={self.checked}"


SUITES: dict[str, IdentitySuite] = {}


def suite(name: str, description: str, **defaults):
    def register(fn):
        SUITES[name] = IdentitySuite(name, description, defaults, fn)
        return fn

    return register


def suite_names() -> list[str]:
    return sorted(SUITES)


def _equal(lhs, rhs) -> bool:
    if isinstance(lhs, QRational) or isinstance(rhs, QRational):
        return QRational.coerce(lhs) == QRational.coerce(rhs)
    return lhs == rhs


def run_suite(name: str, **ranges) -> IdentityReport:
    try:
        s = SUITES[name]
    except KeyError:
        raise UnknownSuite(name) from None
    unknown = set(ranges) - set(s.defaults)
    if unknown:
        raise TypeError(f"suite {name!r} takes no range {sorted(unknown)}")
    rng = {**s.defaults, **ranges}
    start = time.perf_counter()
    checked = 0
    counterexample = None
    try:
        for params, lhs, rhs in s.cases(**rng):
            checked += 1
            if not _equal(lhs, rhs):
                counterexample = {"params": params, "lhs": str(lhs), "rhs": str(rhs)}
                break
    except NotDivisible as exc:
        counterexample = {"params": {}, "error": f"NotDivisible: {exc}"}
    millis = (time.perf_counter() - start) * 1000
    return IdentityReport(name, rng, checked, counterexample is None, counterexample, millis)


def run_all(max_n: int | None = None, max_p: int | None = None) -> list[IdentityReport]:
    """Run every suite; ``max_n`` / ``max_p`` cap the ranges that use them."""
    reports = []
    for name in suite_names():
        s = SUITES[name]
        overrides = {}
        for key, cap in (("max_n", max_n), ("max_p", max_p), ("max_i", max_n)):
            if cap is not None and key in s.defaults:
                overrides[key] = cap
        reports.append(run_suite(name, **overrides))
    return reports


def reports_to_jsonl(reports) -> str:
    return "\n".join(json.dumps(r.to_json(), sort_keys=True) for r in reports)


def _h_coeff(i: int, j: int) -> QRational:
    return QRational.from_factors(1, braceA_fall_factors(i - 1 + j, i - j), brace_factorial_factors(i - j))


def _twist(m: int, p: int = 1) -> LaurentPoly2:
    return LaurentPoly2.monomial(1, 2 * m * p, 2 * m * (m - 1) * p)


# ---------------------------------------------------------------------------
# q-symbols


@suite("qbinomial-symmetry", "[n,i] = [n,n-i]", max_n=12)
def _(max_n):
    for n in range(max_n + 1):
        for i in range(n + 1):
            yield {"n": n, "i": i}, qbinomial_poly(n, i), qbinomial_poly(n, n - i)


@suite("qbinomial-pascal", "[n,i] = q^i [n-1,i] + q^-(n-i) [n-1,i-1]", max_n=12)
def _(max_n):
    for n in range(1, max_n + 1):
        for i in range(n + 1):
            rhs = qbinomial(n - 1, i, strict=False).num.shift(0, i) + qbinomial(
                n - 1, i - 1, strict=False
            ).num.shift(0, -(n - i))
            yield {"n": n, "i": i}, qbinomial_poly(n, i), rhs


@suite("qbinomial-mirror", "[n,i] is invariant under q -> q^-1", max_n=12)
def _(max_n):
    for n in range(max_n + 1):
        for i in range(n + 1):
            yield {"n": n, "i": i}, qbinomial_poly(n, i).mirror(), qbinomial_poly(n, i)


@suite("brace-fall-vanishing", "{n}_i = 0 iff 0 <= n < i", max_n=8)
def _(max_n):
    for n in range(max_n + 1):
        for i in range(max_n + 2):
            yield {"n": n, "i": i}, brace_fall(n, i).is_zero(), n < i


@suite(
    "dmn-transformation",
    "{m-1;a}{n-1;a} = {m+n-i-1;a}{i-1;a} + {m-i}{n-i}",
    bound=6,
)
def _(bound):
    r = range(-bound, bound + 1)
    for m in r:
        for n in r:
            for i in r:
                lhs = braceA(m - 1) * braceA(n - 1)
                rhs = braceA(m + n - i - 1) * braceA(i - 1) + brace(m - i) * brace(n - i)
                yield {"m": m, "n": n, "i": i}, lhs, rhs


@suite(
    "eta-brace-identity",
    "{n}{n-1;a} = ({2n;a} - {2(n-1);a} + {-2;a} - {0;a})/{1}",
    bound=8,
)
def _(bound):
    for n in range(-bound, bound + 1):
        rhs = QRational(
            braceA(2 * n) - braceA(2 * (n - 1)) + braceA(-2) - braceA(0), [QFactor.brace(1)]
        )
        yield {"n": n}, QRational(brace(n) * braceA(n - 1)), rhs


# ---------------------------------------------------------------------------
# coefficient families


@suite("eta-decomposition", "eta(n,0) = eta(n,i) + eta(i,0)", max_n=10)
def _(max_n):
    for n in range(max_n + 1):
        for i in range(n + 1):
            yield {"n": n, "i": i}, C.eta(n, 0), C.eta(n, i) + C.eta(i, 0)


@suite("theta-recursion", "theta(n,k) = theta(n,k-1) eta(n,k-1)", max_n=10)
def _(max_n):
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            yield {"n": n, "k": k}, C.theta(n, k), C.theta(n, k - 1) * C.eta(n, k - 1)


@suite("theta-vanishing", "theta(n,i) = 0 exactly when i > n", max_n=6)
def _(max_n):
    for n in range(max_n + 1):
        for i in range(2 * n + 2):
            yield {"n": n, "i": i}, C.theta(n, i).is_zero(), i > n


@suite("boundary-brackets", "sigma(0,i) = <H_i>, tau(0,i) = <E_i>", max_i=10)
def _(max_i):
    for i in range(max_i + 1):
        yield {"family": "sigma", "i": i}, C.sigma(0, i), C.bracket_H(i)
        yield {"family": "tau", "i": i}, C.tau(0, i), C.bracket_E(i)


@suite(
    "sigma-expansion",
    "sigma(n,i) = sum_j {i-1+j;a}_{i-j}/{i-j}! theta(n,j)",
    max_n=6,
    max_i=6,
)
def _(max_n, max_i):
    for n in range(max_n + 1):
        for i in range(max_i + 1):
            rhs = QRational(0)
            for j in range(i + 1):
                rhs = rhs + _h_coeff(i, j) * C.theta(n, j)
            yield {"n": n, "i": i}, C.sigma(n, i), rhs


@suite(
    "determinant-formula",
    "sigma(n,i) = sum_{j>=1} (-1)^(j-1) sigma(n,i-j) tau(n,j)",
    max_n=6,
    max_i=6,
)
def _(max_n, max_i):
    for n in range(max_n + 1):
        for i in range(1, max_i + 1):
            rhs = QRational(0)
            for j in range(1, i + 1):
                rhs = rhs + C.sigma(n, i - j) * C.tau(n, j) * (1 if j & 1 else -1)
            yield {"n": n, "i": i}, C.sigma(n, i), rhs


@suite("tau-raw", "three-term tau reduces to the closed form", max_n=8, max_i=8)
def _(max_n, max_i):
    for n in range(max_n + 1):
        for i in range(1, max_i + 1):
            yield {"n": n, "i": i}, C.tau_raw(n, i), C.tau(n, i)


def _beta_formula(i, j, m, n, k) -> QRational:
    # the beta closed form evaluated without the i <= j restriction
    num = (
        brace_fall_factors(m - j, k)
        * brace_fall_factors(n - j, k)
        * brace_fall_factors(j, i - k)
        * braceA_fall_factors(m + n - j - k - 1, i - k)
    )
    den = brace_fall_factors(m, i) * brace_fall_factors(n, i)
    return QRational.from_factors(qbinomial_poly(i, k), num, den)


@suite(
    "beta-symmetry",
    "beta^j_{i-k,i-j:i,i} = beta^k_{i-j,i-k:i,i} = {j}!{k}!{i-1;a}_{i-j-k}/({i}_j{i}_k{i-j-k}!)",
    max_i=6,
)
def _(max_i):
    for i in range(max_i + 1):
        for j in range(i + 1):
            for k in range(i - j + 1):
                lhs = _beta_formula(i - k, i - j, i, i, j)
                rhs = _beta_formula(i - j, i - k, i, i, k)
                closed = QRational.from_factors(
                    1,
                    brace_factorial_factors(j)
                    * brace_factorial_factors(k)
                    * braceA_fall_factors(i - 1, i - j - k),
                    brace_fall_factors(i, j) * brace_fall_factors(i, k) * brace_factorial_factors(i - j - k),
                )
                yield {"i": i, "j": j, "k": k}, lhs, rhs
                yield {"i": i, "j": j, "k": k, "side": "closed"}, lhs, closed
                if j <= k:
                    yield {"i": i, "j": j, "k": k, "side": "beta"}, C.beta(i - k, i - j, i, i, j), closed


@suite("alpha-bar-mirror", "alpha_bar = alpha(a^-1, q^-1)", max_n=6)
def _(max_n):
    for m in range(max_n + 1):
        for n in range(max_n + 1):
            for i in range(min(m, n) + 1):
                yield {"m": m, "n": n, "i": i}, C.alpha_bar(m, n, i), C.alpha(m, n, i).reduce().mirror()


@suite(
    "eigen-proposition",
    "a^2n q^2n(n-1) = sum_i a^i q^(i(i-1)/2) [n,i] {n+i-2;a}_i",
    max_n=12,
)
def _(max_n):
    for n in range(max_n + 1):
        total = ZERO
        for term in C.eigen_expansion_terms(n):
            total = total + term
        yield {"n": n}, total, _twist(n)


@suite(
    "omega-eigen",
    "sum_i t_i theta(n,i) matches the eigenvalue expansion termwise",
    max_n=8,
)
def _(max_n):
    for n in range(max_n + 1):
        terms = C.eigen_expansion_terms(n)
        for i in range(n + 1):
            yield {"n": n, "i": i}, C.t_coeff(i) * C.theta(n, i), terms[i]


@suite("lambda-triangle", "rows of the splitting triangle", max_n=8)
def _(max_n):
    for n in range(max_n + 1):
        top = _twist(n)
        yield {"n": n, "entry": (0, 0)}, C.lambda_(0, 0, n), top
        for i in range(n + 1):
            row = ZERO
            for k in range(i + 1):
                row = row + C.lambda_(i, k, n)
            yield {"n": n, "row": i}, row, top
        for i in range(n):
            # left edge: only the first split of (i, 0) lands in (i+1, 0)
            left = C.lambda_(i, 0, n).shift(-1, -(n + i - 1)) * braceA(n + i - 1)
            yield {"n": n, "entry": (i + 1, 0)}, C.lambda_(i + 1, 0, n), left
            for j in range(i):
                # (i+1, j+1) collects the second split of (i, j) and the first of (i, j+1)
                merged = C.lambda_(i, j, n).shift(-2, -2 * (n + i - j - 1)) + C.lambda_(
                    i, j + 1, n
                ).shift(-1, -(n + i - j - 2)) * braceA(n + i - j - 2)
                yield {"n": n, "entry": (i + 1, j + 1)}, C.lambda_(i + 1, j + 1, n), merged
            # right edge: only the second split of (i, i)
            right = C.lambda_(i, i, n).shift(-2, -2 * (n - 1))
            yield {"n": n, "entry": (i + 1, i + 1)}, C.lambda_(i + 1, i + 1, n), right
        terms = C.eigen_expansion_terms(n)
        for i in range(n + 1):
            yield {"n": n, "summand": i}, C.lambda_(n, n - i, n), terms[i]


@suite("two-way-T", "T_sym(n,p) = T_omega(n,p)", max_n=5, max_p=3)
def _(max_n, max_p):
    for n in range(max_n + 1):
        for p in range(-max_p, max_p + 1):
            yield {"n": n, "p": p}, C.T_sym(n, p), C.T_omega(n, p)


@suite("T-direct", "sum_i y x (twist)^2p equals T_sym", max_n=5, max_p=3)
def _(max_n, max_p):
    for n in range(max_n + 1):
        for p in range(-max_p, max_p + 1):
            yield {"n": n, "p": p}, C.T_yx(n, p), C.T_sym(n, p)


@suite("p-pm1-collapse", "t_{n,1} = t_n and t_{n,-1} = tbar_n", max_n=10)
def _(max_n):
    for n in range(max_n + 1):
        yield {"n": n, "p": 1}, C.t_p(n, 1), C.t_coeff(n)
        yield {"n": n, "p": -1}, C.t_p(n, -1), C.t_bar(n)


@suite(
    "omega-p-eigen",
    "sum_{i<=m} t_{i,p} theta(m,i) = (a^2m q^2m(m-1))^p",
    max_n=5,
    max_p=3,
)
def _(max_n, max_p):
    for m in range(max_n + 1):
        for p in range(-max_p, max_p + 1):
            lhs = QRational(0)
            for i in range(m + 1):
                lhs = lhs + C.t_p(i, p) * C.theta(m, i)
            yield {"m": m, "p": p}, lhs, _twist(m, p)


@suite("bracket-D", "closed <D_{m,n}> equals the symmetrizer sum", max_n=6)
def _(max_n):
    for n in range(1, max_n + 1):
        for m in range(n, max_n + 1):
            yield {"m": m, "n": n}, C.bracket_D(m, n), C.bracket_D_sum(m, n)
    for m in range(max_n + 1):
        yield {"m": m, "n": 0}, C.bracket_D(m, 0), C.bracket_D_sum(m, 0)


@suite("r-eigen", "R_i has eigenvalue theta(n,i) through the inverse basis change", max_n=5)
def _(max_n):
    basis = I.h_to_r(max_n)
    for n in range(max_n + 1):
        for i in range(max_n + 1):
            lhs = QRational(0)
            for j, d in enumerate(basis.inverse[i]):
                lhs = lhs + d * C.sigma(n, j)
            yield {"n": n, "i": i}, lhs, C.theta(n, i)


# ---------------------------------------------------------------------------
# invariants


@suite("basis-change-inverse", "forward * inverse = identity", max_n=10)
def _(max_n):
    basis = I.h_to_r(max_n)
    for i in range(max_n + 1):
        for j in range(i + 1):
            total = QRational(0)
            for k in range(j, i + 1):
                total = total + basis.forward[i][k] * basis.inverse[k][j]
            yield {"i": i, "j": j}, total, int(i == j)


@suite("double-vs-single-sum", "double sum at p = +-1 equals the single sums", max_n=8)
def _(max_n):
    for n in range(max_n + 1):
        yield {"n": n, "p": 1}, I.colored_homfly_twist(n, 1), I.colored_homfly_trefoil(n)
        yield {"n": n, "p": -1}, I.colored_homfly_twist(n, -1), I.colored_homfly_fig8(n)


@suite("amphichirality", "the figure-eight invariant is mirror symmetric", max_n=8)
def _(max_n):
    for n in range(max_n + 1):
        h = I.colored_homfly_twist(n, -1)
        yield {"n": n}, h.mirror(), h


@suite("polynomiality", "every H_n(K_p) reduces to a Laurent polynomial", max_n=6, max_p=3)
def _(max_n, max_p):
    for n in range(max_n + 1):
        for p in range(-max_p, max_p + 1):
            # raises NotDivisible on failure
            h = I.colored_homfly_twist(n, p)
            yield {"n": n, "p": p}, isinstance(h, LaurentPoly2), True


@suite("unknot", "H_n(K_0) = 1, with and without the shortcut", max_n=8)
def _(max_n):
    for n in range(max_n + 1):
        yield {"n": n}, I.colored_homfly_twist(n, 0), 1
        yield {"n": n, "shortcut": False}, I.colored_homfly_twist(n, 0, shortcut=False), 1


@suite("sl1-triviality", "H_n(K_p) at a = q is 1", max_n=6, max_p=3)
def _(max_n, max_p):
    for n in range(max_n + 1):
        for p in range(-max_p, max_p + 1):
            yield {"n": n, "p": p}, I.colored_homfly_twist(n, p).substitute_a(1), LaurentPoly1({0: 1})


def alexander_twist(p: int) -> LaurentPoly1:
    """Alexander polynomial of ``K_p`` from the Seifert matrix ``[[-1, 1], [0, -p]]``.

    ``det(V - t V^T) = p t^2 + (1 - 2p) t + p``, symmetrized by ``t^-1``.
    """
    t = LaurentPoly1({1: 1}, "t")
    v = [[-1, 1], [0, -p]]
    m = [[v[r][c] - t * v[c][r] for c in range(2)] for r in range(2)]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return det * LaurentPoly1({-1: 1}, "t")


@suite(
    "alexander-specialization",
    "H_n(K_p) at a = 1 is the Alexander polynomial at t = q^2n",
    max_n=6,
    max_p=3,
)
def _(max_n, max_p):
    for n in range(1, max_n + 1):
        for p in range(-max_p, max_p + 1):
            lhs = I.colored_homfly_twist(n, p).substitute_a(0)
            yield {"n": n, "p": p}, lhs, alexander_twist(p).rescale(2 * n, "q")


# ---------------------------------------------------------------------------
# external anchor


@dataclass
class ConventionReport:
    matching: tuple[str, ...]
    per_knot: dict = field(default_factory=dict)

    @property
    def convention(self) -> str | None:
        return self.matching[0] if len(self.matching) == 1 else None


CONVENTIONS = {"t=q^2": 2, "t=q^-2": -2}
BUILTIN_KNOTS = {"left_trefoil": (1, LEFT_TREFOIL), "figure_eight": (-1, FIGURE_EIGHT)}


def resolve_jones_convention(knots=None) -> ConventionReport:
    """Find which of ``t = q^2`` / ``t = q^-2`` turns ``H_1(K_p)|_{a=q^2}`` into the oracle's Jones.

    ``knots`` maps a name to ``(p, diagram)``; the default is both built-in
    knots.  Raises :class:`NoConventionMatches` if no convention fits them all.
    """
    if knots is None:
        knots = BUILTIN_KNOTS
    if not knots:
        raise NoConventionMatches("no knots to compare")
    per_knot = {}
    for name, (p, diagram) in knots.items():
        ours = I.colored_jones(1, p, 2)
        jones = jones_in_t(diagram)
        per_knot[name] = {c: jones.rescale(s, "q") == ours for c, s in CONVENTIONS.items()}
    matching = tuple(c for c in CONVENTIONS if all(v[c] for v in per_knot.values()))
    if not matching:
        raise NoConventionMatches(f"no convention matches: {per_knot}")
    return ConventionReport(matching, per_knot)


@suite("jones-anchor", "n = 1 specializations match the state-sum oracle under one convention")
def _():
    report = resolve_jones_convention()
    yield {"knots": sorted(BUILTIN_KNOTS)}, len(report.matching), 1
    scale = CONVENTIONS[report.matching[0]]
    for name, (p, diagram) in BUILTIN_KNOTS.items():
        yield {"knot": name}, jones_in_t(diagram).rescale(scale, "q"), I.colored_jones(1, p, 2)
    yield {"knot": "unknot"}, jones_in_t(UNKNOT).rescale(scale, "q"), I.colored_jones(1, 0, 2)


@suite("oracle-disjoint-unknot", "<D u O> = (-A^2 - A^-2) <D>")
def _():
    delta = LaurentPoly1({2: -1, -2: -1}, "A")
    for name, d in (("unknot", UNKNOT), ("left_trefoil", LEFT_TREFOIL), ("figure_eight", FIGURE_EIGHT)):
        yield {"diagram": name}, kauffman_bracket(d.disjoint_unknot()), delta * kauffman_bracket(d)
