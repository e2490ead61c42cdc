"""Command-line front end.

    coloredhomfly twist  --p -1 --n 2
    coloredhomfly jones  --p 1 --n 3 --N 3
    coloredhomfly table  --p -2..2 --n 0..4 --format json --out t.json
    coloredhomfly verify --suite all --max-n 6 --max-p 3

Exit status: 0 ok, 1 a verification suite failed, 2 usage error,
3 a sum failed to cancel to a Laurent polynomial.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .invariants import colored_homfly_twist, colored_jones
from .laurent import LaurentPoly1, LaurentPoly2, NotDivisible
from .verify import SUITES, UnknownSuite, reports_to_jsonl, run_all, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

_RANGE = re.compile(r"^(-?\d+)(?:\.\.(-?\d+))?$")
_NUMERIC = re.compile(r"^-\d+(\.\.-?\d+)?$")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    p: tuple[int, ...] = (0,)
    n: tuple[int, ...] = (0,)
    N: int | None = None
    format: str = "text"
    out: str | None = None
    suite: str = "all"
    max_n: int | None = None
    max_p: int | None = None

    def __post_init__(self):
        if any(v < 0 for v in self.n):
            raise UsageError("--n must be non-negative")
        if self.N is not None and self.N < 2:
            raise UsageError("--N must be at least 2")
        for name in ("max_n", "max_p"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")


def parse_range(text: str) -> tuple[int, ...]:
    """``"3"`` -> ``(3,)``; ``"-2..2"`` -> ``(-2, -1, 0, 1, 2)``."""
    m = _RANGE.match(text.strip())
    if not m:
        raise UsageError(f"bad integer or range {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return tuple(range(lo, hi + 1))


def _single(values: tuple[int, ...], flag: str) -> int:
    if len(values) != 1:
        raise UsageError(f"{flag} takes a single integer for this subcommand")
    return values[0]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coloredhomfly", description="Colored HOMFLY-PT polynomials of twist knots.")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p, ranged=False):
        kind = "integer or lo..hi" if ranged else "integer"
        p.add_argument("--p", required=True, metavar="P", help=f"full twists ({kind})")
        p.add_argument("--n", required=True, metavar="N", help=f"color ({kind})")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write to this file instead of stdout")

    common(sub.add_parser("twist", help="H_n(K_p)"))
    jones = sub.add_parser("jones", help="H_n(K_p) at a = q^N")
    common(jones)
    jones.add_argument("--N", type=int, default=2)
    table = sub.add_parser("table", help="a grid of H_n(K_p)")
    common(table, ranged=True)
    table.add_argument("--N", type=int, default=None, help="specialize every entry at a = q^N")

    verify = sub.add_parser("verify", help="run identity suites")
    verify.add_argument("--suite", default="all")
    verify.add_argument("--max-n", type=int, dest="max_n")
    verify.add_argument("--max-p", type=int, dest="max_p")
    verify.add_argument("--format", choices=("text", "json"), default="json")
    verify.add_argument("--out")
    return parser


def _fix_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-2..2" as an option; glue numeric values onto their flag
    out: list[str] = []
    for arg in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NUMERIC.match(arg):
            out[-1] = f"{out[-1]}={arg}"
        else:
            out.append(arg)
    return out


def parse_config(argv: list[str]) -> CliConfig:
    ns = build_parser().parse_args(_fix_negative_values(argv))
    if ns.subcommand == "verify":
        return CliConfig("verify", format=ns.format, out=ns.out, suite=ns.suite, max_n=ns.max_n, max_p=ns.max_p)
    return CliConfig(
        ns.subcommand,
        p=parse_range(ns.p),
        n=parse_range(ns.n),
        N=getattr(ns, "N", None),
        format=ns.format,
        out=ns.out,
    )


def polynomial_json(p: int, n: int, poly: LaurentPoly2 | LaurentPoly1, N: int | None = None) -> dict:
    entry = {"knot": {"type": "twist", "p": p}, "color": n}
    if N is not None:
        entry["N"] = N
    entry["terms"] = poly.to_json_terms()
    return entry


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_twist(cfg: CliConfig) -> int:
    p, n = _single(cfg.p, "--p"), _single(cfg.n, "--n")
    poly = colored_homfly_twist(n, p)
    text = json.dumps(polynomial_json(p, n, poly)) if cfg.format == "json" else str(poly)
    _emit(text, cfg.out)
    return EXIT_OK


def cmd_jones(cfg: CliConfig) -> int:
    p, n = _single(cfg.p, "--p"), _single(cfg.n, "--n")
    N = 2 if cfg.N is None else cfg.N
    poly = colored_jones(n, p, N)
    text = json.dumps(polynomial_json(p, n, poly, N)) if cfg.format == "json" else str(poly)
    _emit(text, cfg.out)
    return EXIT_OK


def cmd_table(cfg: CliConfig) -> int:
    N = cfg.N
    entries = []
    for p in cfg.p:
        for n in cfg.n:
            poly = colored_homfly_twist(n, p) if N is None else colored_jones(n, p, N)
            entries.append((p, n, poly))
    if cfg.format == "json":
        text = json.dumps([polynomial_json(p, n, poly, N) for p, n, poly in entries], indent=1)
    else:
        text = "\n".join(f"p={p} n={n}: {poly}" for p, n, poly in entries)
    _emit(text, cfg.out)
    return EXIT_OK


def cmd_verify(cfg: CliConfig) -> int:
    if cfg.suite == "all":
        reports = run_all(cfg.max_n, cfg.max_p)
    else:
        s = SUITES.get(cfg.suite)
        if s is None:
            raise UnknownSuite(cfg.suite)
        caps = {"max_n": cfg.max_n, "max_i": cfg.max_n, "max_p": cfg.max_p}
        reports = [run_suite(cfg.suite, **{k: v for k, v in caps.items() if v is not None and k in s.defaults})]
    if cfg.format == "json":
        text = reports_to_jsonl(reports)
    else:
        text = "\n".join(r.line() for r in reports)
    _emit(text, cfg.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
        if cfg.subcommand == "twist":
            return cmd_twist(cfg)
        if cfg.subcommand == "jones":
            return cmd_jones(cfg)
        if cfg.subcommand == "table":
            return cmd_table(cfg)
        return cmd_verify(cfg)
    except UsageError as exc:
        print(f"coloredhomfly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownSuite as exc:
        print(f"coloredhomfly: error: unknown suite {exc.args[0]!r}; known: {', '.join(sorted(SUITES))}", file=sys.stderr)
        return EXIT_USAGE
    except NotDivisible as exc:
        print(f"coloredhomfly: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
