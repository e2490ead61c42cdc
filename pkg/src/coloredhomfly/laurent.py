"""Exact Laurent polynomials in ``a`` and ``q`` with integer coefficients.

Everything in the package is built on :class:`LaurentPoly2`, a sparse map from
exponent pairs ``(e_a, e_q)`` to nonzero Python integers.  Denominators are
kept apart as :class:`FactorProduct` multisets of elementary binomials and only
divided out at the end, which is what :class:`QRational` is for.

Division is never general: every denominator in sight is a product of

* ``{k}   = q^k - q^-k``       (``QFactor.brace(k)``)
* ``{k;a} = a q^k - a^-1 q^-k`` (``QFactor.brace_a(k)``)

up to units, and both are a monomial times ``M - 1`` for a monomial ``M``.
Dividing by ``M - 1`` is a running sum along the direction of ``M``.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "LaurentPoly2",
    "LaurentPoly1",
    "QFactor",
    "FactorProduct",
    "QRational",
    "NotDivisible",
    "ZeroFactor",
    "poly_monomial",
    "poly_arith",
    "mirror",
    "substitute_a",
    "divide_exact",
    "qrat_reduce",
    "qrat_eq",
    "parse_poly",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class ZeroFactor(ZeroDivisionError):
    """Raised on division by a factor that expands to zero."""


Exponent = tuple[int, int]
Scalar = Union[int, "LaurentPoly2"]


class LaurentPoly2:
    """Sparse Laurent polynomial in ``a`` and ``q`` over the integers.

    Instances are immutable and hashable.  Terms iterate in descending
    lexicographic order of ``(e_a, e_q)``, which is also the print order.

    >>> a, q = LaurentPoly2.gens()
    >>> str((a * q - a**-1 * q**-1) * (a * q**-1 - a**-1 * q))
    'a^2 - q^2 - q^-2 + a^-2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean = {}
        if terms:
            for (ea, eq), c in terms.items():
                c = int(c)
                if c:
                    clean[(int(ea), int(eq))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPoly2":
        # terms must already be free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def gens(cls) -> tuple["LaurentPoly2", "LaurentPoly2"]:
        return cls._wrap({(1, 0): 1}), cls._wrap({(0, 1): 1})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls._wrap({(0, 0): int(c)}) if c else cls._wrap({})

    @classmethod
    def monomial(cls, c: int, e_a: int = 0, e_q: int = 0) -> "LaurentPoly2":
        return cls._wrap({(int(e_a), int(e_q)): int(c)}) if c else cls._wrap({})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly2":
        if isinstance(x, LaurentPoly2):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly2")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def coefficient(self, e_a: int, e_q: int) -> int:
        return self._terms.get((e_a, e_q), 0)

    def degree_range(self, var: str) -> tuple[int, int]:
        """(min, max) exponent of ``var``; raises on the zero polynomial."""
        idx = {"a": 0, "q": 1}[var]
        exps = [e[idx] for e in self._terms]
        return min(exps), max(exps)

    # -- ring operations --------------------------------------------------

    def __add__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        elif not isinstance(other, LaurentPoly2):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly2._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2._wrap({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "LaurentPoly2":
        return self

    def __sub__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        elif not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return LaurentPoly2.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly2._wrap({})
            return LaurentPoly2._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        x, y = self._terms, other._terms
        if not x or not y:
            return LaurentPoly2._wrap({})
        if len(x) < len(y):
            x, y = y, x
        if len(y) == 1:
            ((ya, yq), yc), = y.items()
            return LaurentPoly2._wrap({(ea + ya, eq + yq): c * yc for (ea, eq), c in x.items()})
        out: dict = defaultdict(int)
        for (ya, yq), yc in y.items():
            for (ea, eq), c in x.items():
                out[(ea + ya, eq + yq)] += c * yc
        return LaurentPoly2._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly2":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials have Laurent inverses")
            ((ea, eq), c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"coefficient {c} is not a unit")
            return LaurentPoly2._wrap({(ea * k, eq * k): c ** (-k)})
        result = LaurentPoly2.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, d_a: int = 0, d_q: int = 0, scale: int = 1) -> "LaurentPoly2":
        """Multiply by ``scale * a^d_a * q^d_q``."""
        if not scale:
            return LaurentPoly2._wrap({})
        return LaurentPoly2._wrap(
            {(ea + d_a, eq + d_q): c * scale for (ea, eq), c in self._terms.items()}
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if isinstance(other, QRational):
            return other == self
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitutions ----------------------------------------------------

    def mirror(self) -> "LaurentPoly2":
        """Substitute ``a -> a^-1``, ``q -> q^-1``."""
        return LaurentPoly2._wrap({(-ea, -eq): c for (ea, eq), c in self._terms.items()})

    def q_to_neg_inverse(self) -> "LaurentPoly2":
        """Substitute ``q -> -q^-1``."""
        return LaurentPoly2._wrap(
            {(ea, -eq): (-c if eq & 1 else c) for (ea, eq), c in self._terms.items()}
        )

    def substitute_a(self, N: int) -> "LaurentPoly1":
        """Specialize ``a = q^N``."""
        out: dict = defaultdict(int)
        for (ea, eq), c in self._terms.items():
            out[eq + N * ea] += c
        return LaurentPoly1(out, "q")

    def evaluate(self, a, q):
        """Numeric evaluation; meant for spot checks only."""
        return sum(c * a**ea * q**eq for (ea, eq), c in self._terms.items())

    # -- formatting -------------------------------------------------------

    def __str__(self) -> str:
        return _format_terms(
            ((c, (("a", ea), ("q", eq))) for (ea, eq), c in self.items())
        )

    def __repr__(self) -> str:
        return f"LaurentPoly2('{self}')"

    def to_json_terms(self) -> list[dict]:
        return [{"a": ea, "q": eq, "c": str(c)} for (ea, eq), c in self.items()]

    @classmethod
    def from_json_terms(cls, terms: Iterable[Mapping]) -> "LaurentPoly2":
        out: dict = defaultdict(int)
        for t in terms:
            out[(int(t["a"]), int(t["q"]))] += int(t["c"])
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        out: dict = defaultdict(int)
        for c, exps in _parse_terms(text, ("a", "q")):
            out[(exps["a"], exps["q"])] += c
        return cls(out)


class LaurentPoly1:
    """Sparse Laurent polynomial in a single named variable.

    Used for ``a = q^N`` specializations and for the Jones polynomial coming
    out of the state-sum oracle.
    """

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "q"):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self.var = var

    @classmethod
    def monomial(cls, c: int, e: int, var: str = "q") -> "LaurentPoly1":
        return cls({e: c}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._terms.items(), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other) -> "LaurentPoly1":
        if isinstance(other, int):
            return LaurentPoly1({0: other}, self.var)
        if isinstance(other, LaurentPoly1):
            if other.var != self.var and other._terms and not set(other._terms) <= {0}:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        raise TypeError(f"cannot combine LaurentPoly1 with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly1":
        other = self._coerce(other)
        out = Counter(self._terms)
        for e, c in other._terms.items():
            out[e] += c
        return LaurentPoly1(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly1":
        return LaurentPoly1({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other) -> "LaurentPoly1":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly1":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly1":
        other = self._coerce(other)
        out: dict = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] += c1 * c2
        return LaurentPoly1(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly1":
        if k < 0:
            if len(self._terms) != 1:
                raise NotDivisible("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"coefficient {c} is not a unit")
            return LaurentPoly1({e * k: c ** (-k)}, self.var)
        result = LaurentPoly1({0: 1}, self.var)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly1({0: other}, self.var)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        if self._terms and set(self._terms) != {0} and other.var != self.var:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self._terms.items())))

    def mirror(self) -> "LaurentPoly1":
        return LaurentPoly1({-e: c for e, c in self._terms.items()}, self.var)

    def rescale(self, factor: int, var: str | None = None) -> "LaurentPoly1":
        """Substitute ``x -> y^factor`` (``factor`` may be negative)."""
        return LaurentPoly1(
            {e * factor: c for e, c in self._terms.items()}, var or self.var
        )

    def __str__(self) -> str:
        return _format_terms((c, ((self.var, e),)) for e, c in self.items())

    def __repr__(self) -> str:
        return f"LaurentPoly1('{self}', var={self.var!r})"

    def to_json_terms(self) -> list[dict]:
        return [{self.var: e, "c": str(c)} for e, c in self.items()]

    @classmethod
    def parse(cls, text: str, var: str = "q") -> "LaurentPoly1":
        out: dict = defaultdict(int)
        for c, exps in _parse_terms(text, (var,)):
            out[exps[var]] += c
        return cls(out, var)


def _format_terms(terms) -> str:
    pieces = []
    for c, exps in terms:
        vars_ = []
        for name, e in exps:
            if e == 1:
                vars_.append(name)
            elif e:
                vars_.append(f"{name}^{e}")
        mag = abs(c)
        if not vars_:
            body = str(mag)
        elif mag == 1:
            body = "*".join(vars_)
        else:
            body = "*".join([str(mag)] + vars_)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces) if pieces else "0"


_SPLIT = re.compile(r"(?<![\^*])(?=[+-])")
_FACTOR = re.compile(r"^(?:(\d+)|([A-Za-z]\w*)(?:\^\(?(-?\d+)\)?)?)$")


def _parse_terms(text: str, variables: tuple[str, ...]):
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial text")
    for chunk in _SPLIT.split(s):
        if not chunk:
            continue
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = sign
        exps = dict.fromkeys(variables, 0)
        for factor in chunk.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            if m.group(1) is not None:
                coeff *= int(m.group(1))
            else:
                name = m.group(2)
                if name not in exps:
                    raise ValueError(f"unknown variable {name!r} in {text!r}")
                exps[name] += int(m.group(3)) if m.group(3) is not None else 1
        yield coeff, exps


def parse_poly(text: str) -> LaurentPoly2:
    return LaurentPoly2.parse(text)


# ---------------------------------------------------------------------------
# elementary factors


@dataclass(frozen=True, order=True)
class QFactor:
    """One elementary factor.

    ``kind`` is ``"brace"`` (``{k}``), ``"brace_a"`` (``{k;a}``), ``"int"``
    (the integer ``k``) or ``"monomial"`` (``a^k q^e_q``).
    """

    kind: str
    k: int
    e_q: int = 0

    @classmethod
    def brace(cls, k: int) -> "QFactor":
        return cls("brace", k)

    @classmethod
    def brace_a(cls, k: int) -> "QFactor":
        return cls("brace_a", k)

    @classmethod
    def integer(cls, c: int) -> "QFactor":
        return cls("int", c)

    @classmethod
    def monomial(cls, e_a: int, e_q: int) -> "QFactor":
        return cls("monomial", e_a, e_q)

    def expand(self) -> LaurentPoly2:
        k = self.k
        if self.kind == "brace":
            return LaurentPoly2({(0, k): 1, (0, -k): -1}) if k else LaurentPoly2()
        if self.kind == "brace_a":
            return LaurentPoly2._wrap({(1, k): 1, (-1, -k): -1})
        if self.kind == "int":
            return LaurentPoly2.const(k)
        if self.kind == "monomial":
            return LaurentPoly2.monomial(1, k, self.e_q)
        raise ValueError(f"unknown factor kind {self.kind!r}")

    def is_zero(self) -> bool:
        return (self.kind in ("brace", "int")) and self.k == 0

    def __str__(self) -> str:
        if self.kind == "brace":
            return f"{{{self.k}}}"
        if self.kind == "brace_a":
            return f"{{{self.k};a}}"
        if self.kind == "int":
            return str(self.k)
        return str(self.expand())


class FactorProduct:
    """Multiset of :class:`QFactor`, expanded lazily."""

    __slots__ = ("_counts", "_expanded")

    def __init__(self, factors: Iterable[QFactor] | Mapping[QFactor, int] = ()):
        if isinstance(factors, Mapping):
            counts = Counter({f: m for f, m in factors.items() if m > 0})
        else:
            counts = Counter(factors)
        self._counts = counts
        self._expanded = None

    @property
    def counts(self) -> Counter:
        return Counter(self._counts)

    def __iter__(self) -> Iterator[QFactor]:
        for f in sorted(self._counts):
            for _ in range(self._counts[f]):
                yield f

    def distinct(self) -> list[QFactor]:
        return sorted(self._counts)

    def multiplicity(self, f: QFactor) -> int:
        return self._counts.get(f, 0)

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __mul__(self, other: "FactorProduct") -> "FactorProduct":
        return FactorProduct(self._counts + other._counts)

    def lcm(self, other: "FactorProduct") -> "FactorProduct":
        return FactorProduct(self._counts | other._counts)

    def gcd(self, other: "FactorProduct") -> "FactorProduct":
        return FactorProduct(self._counts & other._counts)

    def __sub__(self, other: "FactorProduct") -> "FactorProduct":
        """Multiset difference; factors of ``other`` not present are ignored."""
        return FactorProduct(self._counts - other._counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactorProduct):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def expand(self) -> LaurentPoly2:
        if self._expanded is None:
            self._expanded = multiply_factors(LaurentPoly2.const(1), self)
        return self._expanded

    def __str__(self) -> str:
        return "*".join(str(f) for f in self) or "1"

    def __repr__(self) -> str:
        return f"FactorProduct({self})"


def multiply_factors(poly: LaurentPoly2, factors: Iterable[QFactor]) -> LaurentPoly2:
    """Multiply ``poly`` by each factor in turn (cheap for binomials)."""
    for f in factors:
        if f.is_zero():
            return LaurentPoly2()
        if f.kind == "monomial":
            poly = poly.shift(f.k, f.e_q)
        elif f.kind == "int":
            poly = poly * f.k
        elif f.kind == "brace":
            poly = poly.shift(0, f.k) - poly.shift(0, -f.k)
        else:
            poly = poly.shift(1, f.k) - poly.shift(-1, -f.k)
        if not poly:
            return poly
    return poly


# ---------------------------------------------------------------------------
# exact division


def _divide_by_unit_binomial(num: LaurentPoly2, step: Exponent, axis: int) -> LaurentPoly2:
    """Exact quotient ``num / (a^step[0] q^step[1] - 1)``.

    ``step[axis]`` must be positive.  Terms are grouped into lines parallel to
    ``step``; along each line the quotient is a running sum and the total must
    vanish.
    """
    s = step[axis]
    lines: dict = defaultdict(dict)
    for e, c in num._terms.items():
        t = e[axis] // s
        base = (e[0] - t * step[0], e[1] - t * step[1])
        lines[base][t] = c
    out = {}
    for (ba, bq), coeffs in lines.items():
        lo = min(coeffs)
        acc = 0
        for t in range(max(coeffs), lo, -1):
            acc += coeffs.get(t, 0)
            if acc:
                out[(ba + (t - 1) * step[0], bq + (t - 1) * step[1])] = acc
        if acc + coeffs[lo]:
            raise NotDivisible(f"nonzero remainder dividing by {LaurentPoly2.monomial(1, *step) - 1}")
    return LaurentPoly2._wrap(out)


def divide_exact(num: LaurentPoly2, f: QFactor) -> LaurentPoly2:
    """Return ``g`` with ``g * f.expand() == num`` or raise :class:`NotDivisible`."""
    if f.is_zero():
        raise ZeroFactor(f"division by {f}")
    if not num:
        return num
    if f.kind == "monomial":
        return num.shift(-f.k, -f.e_q)
    if f.kind == "int":
        out = {}
        for e, c in num._terms.items():
            qt, r = divmod(c, f.k)
            if r:
                raise NotDivisible(f"coefficient {c} not divisible by {f.k}")
            out[e] = qt
        return LaurentPoly2._wrap(out)
    if f.kind == "brace":
        k = abs(f.k)
        # {k} = q^-k (q^2k - 1)
        g = _divide_by_unit_binomial(num.shift(0, k), (0, 2 * k), 1)
        return g if f.k > 0 else -g
    if f.kind == "brace_a":
        # {k;a} = a^-1 q^-k (a^2 q^2k - 1)
        return _divide_by_unit_binomial(num.shift(1, f.k), (2, 2 * f.k), 0)
    raise ValueError(f"unknown factor kind {f.kind!r}")


# ---------------------------------------------------------------------------
# rational values with factored denominators


def _normalize_den(num: LaurentPoly2, den: FactorProduct) -> tuple[LaurentPoly2, FactorProduct]:
    counts = Counter()
    for f, m in den._counts.items():
        if f.is_zero():
            raise ZeroFactor(f"zero factor {f} in denominator")
        if f.kind == "monomial":
            num = num.shift(-f.k * m, -f.e_q * m)
        elif f.kind == "int":
            if f.k < 0:
                num = num * ((-1) ** m)
            if abs(f.k) != 1:
                counts[QFactor.integer(abs(f.k))] += m
        elif f.kind == "brace" and f.k < 0:
            num = num * ((-1) ** m)
            counts[QFactor.brace(-f.k)] += m
        else:
            counts[f] += m
    if not num:
        counts = Counter()
    return num, FactorProduct(counts)


class QRational:
    """A :class:`LaurentPoly2` numerator over a factored denominator.

    Arithmetic never expands denominators; sums use the multiset lcm.  Call
    :meth:`reduce` to get a polynomial (or :class:`NotDivisible`) and
    :meth:`simplify` to cancel whatever divides.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Scalar = 1, den: FactorProduct | Iterable[QFactor] = ()):
        num = LaurentPoly2.coerce(num)
        if not isinstance(den, FactorProduct):
            den = FactorProduct(den)
        self.num, self.den = _normalize_den(num, den)

    @classmethod
    def from_factors(
        cls,
        coeff: Scalar = 1,
        num_factors: Iterable[QFactor] = (),
        den_factors: Iterable[QFactor] = (),
    ) -> "QRational":
        """Build ``coeff * prod(num_factors) / prod(den_factors)``.

        Factors common to both sides cancel before anything is expanded.
        """
        nf = num_factors if isinstance(num_factors, FactorProduct) else FactorProduct(num_factors)
        df = den_factors if isinstance(den_factors, FactorProduct) else FactorProduct(den_factors)
        common = nf.gcd(df)
        if common:
            nf, df = nf - common, df - common
        for f in nf.distinct():
            if f.is_zero():
                return cls(0)
        return cls(multiply_factors(LaurentPoly2.coerce(coeff), nf), df)

    @classmethod
    def coerce(cls, x) -> "QRational":
        if isinstance(x, QRational):
            return x
        return cls(LaurentPoly2.coerce(x))

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return not self.den

    def __add__(self, other) -> "QRational":
        try:
            other = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return QRational(self.num + other.num, self.den)
        den = self.den.lcm(other.den)
        n1 = multiply_factors(self.num, den - self.den)
        n2 = multiply_factors(other.num, den - other.den)
        return QRational(n1 + n2, den)

    __radd__ = __add__

    def __neg__(self) -> "QRational":
        return QRational(-self.num, self.den)

    def __sub__(self, other) -> "QRational":
        try:
            other = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QRational":
        return QRational.coerce(other) - self

    def __mul__(self, other) -> "QRational":
        if isinstance(other, (int, LaurentPoly2)):
            return QRational(self.num * other, self.den)
        if not isinstance(other, QRational):
            return NotImplemented
        return QRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QRational":
        if k < 0:
            raise ValueError("negative powers of QRational are not supported")
        result = QRational(1)
        for _ in range(k):
            result = result * self
        return result

    def mul_factors(self, factors: Iterable[QFactor], coeff: Scalar = 1) -> "QRational":
        """Multiply by ``coeff * prod(factors)``, cancelling symbolically first."""
        nf = factors if isinstance(factors, FactorProduct) else FactorProduct(factors)
        common = nf.gcd(self.den)
        nf, den = nf - common, self.den - common
        for f in nf.distinct():
            if f.is_zero():
                return QRational(0)
        return QRational(multiply_factors(self.num * coeff, nf), den)

    def div_factors(self, factors: Iterable[QFactor]) -> "QRational":
        nf = factors if isinstance(factors, FactorProduct) else FactorProduct(factors)
        return QRational(self.num, self.den * nf)

    def simplify(self) -> "QRational":
        """Divide out every denominator factor that divides the numerator."""
        num = self.num
        left = Counter()
        for f in self.den.distinct():
            m = self.den.multiplicity(f)
            while m:
                try:
                    num = divide_exact(num, f)
                except NotDivisible:
                    break
                m -= 1
            if m:
                left[f] = m
        return QRational(num, FactorProduct(left))

    def reduce(self) -> LaurentPoly2:
        """The polynomial value, or :class:`NotDivisible` if there is none."""
        num = self.num
        for f in self.den:
            num = divide_exact(num, f)
        return num

    def mirror(self) -> "QRational":
        """``a -> a^-1, q -> q^-1``; both binomial kinds pick up a sign."""
        sign = -1 if sum(m for f, m in self.den._counts.items() if f.kind in ("brace", "brace_a")) & 1 else 1
        den = Counter()
        for f, m in self.den._counts.items():
            if f.kind == "monomial":
                den[QFactor.monomial(-f.k, -f.e_q)] += m
            else:
                den[f] += m
        return QRational(self.num.mirror() * sign, FactorProduct(den))

    def q_to_neg_inverse(self) -> "QRational":
        """``q -> -q^-1``: ``{k} -> (-1)^(k+1) {k}`` and ``{k;a} -> (-1)^k {-k;a}``."""
        sign = 1
        den = Counter()
        for f, m in self.den._counts.items():
            if f.kind == "brace":
                sign *= -1 if (f.k + 1) * m & 1 else 1
                den[f] += m
            elif f.kind == "brace_a":
                sign *= -1 if f.k * m & 1 else 1
                den[QFactor.brace_a(-f.k)] += m
            elif f.kind == "monomial":
                sign *= -1 if f.e_q * m & 1 else 1
                den[QFactor.monomial(f.k, -f.e_q)] += m
            else:
                den[f] += m
        return QRational(self.num.q_to_neg_inverse() * sign, FactorProduct(den))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, LaurentPoly2)):
            other = QRational.coerce(other)
        if not isinstance(other, QRational):
            return NotImplemented
        return qrat_eq(self, other)

    __hash__ = None

    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"QRational({self})"


# ---------------------------------------------------------------------------
# functional surface


def poly_monomial(c: int, e_a: int, e_q: int) -> LaurentPoly2:
    return LaurentPoly2.monomial(c, e_a, e_q)


def poly_arith(x: LaurentPoly2, y: LaurentPoly2, which: str) -> LaurentPoly2:
    if which == "add":
        return x + y
    if which == "sub":
        return x - y
    if which == "mul":
        return x * y
    raise ValueError(f"unknown operation {which!r}")


def mirror(x):
    return x.mirror()


def substitute_a(x: LaurentPoly2, N: int) -> LaurentPoly1:
    return x.substitute_a(N)


def qrat_reduce(r: QRational) -> LaurentPoly2:
    return r.reduce()


def qrat_eq(r1: QRational, r2: QRational) -> bool:
    """Cross-multiplied equality after cancelling shared denominator factors."""
    common = r1.den.gcd(r2.den)
    d1, d2 = r1.den - common, r2.den - common
    return multiply_factors(r1.num, d2) == multiply_factors(r2.num, d1)
