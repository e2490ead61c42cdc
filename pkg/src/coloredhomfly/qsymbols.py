"""Quantum integers, brace symbols and their products.

Notation follows the usual conventions for the HOMFLY-PT skein calculus::

    [n]   = (q^n - q^-n) / (q - q^-1)
    {n}   = q^n - q^-n
    {n;a} = a q^n - a^-1 q^-n

Products of ``i`` consecutive symbols come in two directions.  Falling
products step the index down, ``{n;a}_i = {n;a}{n-1;a}...{n-i+1;a}``.  Rising
products start from a negated index and step up,
``{-n;a}_i = {-n;a}{-n+1;a}...{-n+i-1;a}``.  Length zero is always ``1``.

Each product is available as a :class:`FactorProduct` (``*_factors``) for use
in denominators, and as an expanded :class:`LaurentPoly2`.
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import FactorProduct, LaurentPoly2, QFactor, QRational

__all__ = [
    "NegativeLength",
    "OutOfRange",
    "brace",
    "braceA",
    "brace_fall",
    "braceA_fall",
    "braceA_rise",
    "brace_fall_factors",
    "braceA_fall_factors",
    "braceA_rise_factors",
    "brace_factorial",
    "brace_factorial_factors",
    "qint",
    "qint_poly",
    "qint_factorial",
    "qbinomial",
    "qbinomial_poly",
]


class NegativeLength(ValueError):
    """A product of a negative number of symbols was requested."""


class OutOfRange(ValueError):
    """A q-binomial index lies outside ``0 <= i <= n``."""


def _check_length(i: int) -> None:
    if i < 0:
        raise NegativeLength(f"product length {i} < 0")


@lru_cache(maxsize=None)
def brace(n: int) -> LaurentPoly2:
    return QFactor.brace(n).expand()


@lru_cache(maxsize=None)
def braceA(n: int) -> LaurentPoly2:
    return QFactor.brace_a(n).expand()


def brace_fall_factors(n: int, i: int) -> FactorProduct:
    _check_length(i)
    return FactorProduct(QFactor.brace(n - j) for j in range(i))


def braceA_fall_factors(n: int, i: int) -> FactorProduct:
    _check_length(i)
    return FactorProduct(QFactor.brace_a(n - j) for j in range(i))


def braceA_rise_factors(n: int, i: int) -> FactorProduct:
    """``{-n;a}{-n+1;a}...{-n+i-1;a}``."""
    _check_length(i)
    return FactorProduct(QFactor.brace_a(-n + j) for j in range(i))


def brace_factorial_factors(n: int) -> FactorProduct:
    return brace_fall_factors(n, n)


@lru_cache(maxsize=None)
def brace_fall(n: int, i: int) -> LaurentPoly2:
    return brace_fall_factors(n, i).expand()


@lru_cache(maxsize=None)
def braceA_fall(n: int, i: int) -> LaurentPoly2:
    return braceA_fall_factors(n, i).expand()


@lru_cache(maxsize=None)
def braceA_rise(n: int, i: int) -> LaurentPoly2:
    return braceA_rise_factors(n, i).expand()


@lru_cache(maxsize=None)
def brace_factorial(n: int) -> LaurentPoly2:
    return brace_fall(n, n)


@lru_cache(maxsize=None)
def qint_poly(n: int) -> LaurentPoly2:
    """``[n]`` as a polynomial: ``q^(n-1) + q^(n-3) + ... + q^(1-n)``."""
    sign = 1 if n >= 0 else -1
    m = abs(n)
    return LaurentPoly2({(0, m - 1 - 2 * j): sign for j in range(m)})


def qint(n: int) -> QRational:
    """``[n] = {n}/{1}``, already reduced."""
    return QRational(qint_poly(n))


def qint_factorial(n: int) -> QRational:
    """``[n]! = {n}! / {1}^n``; reduced to a polynomial."""
    _check_length(n)
    value = LaurentPoly2.const(1)
    for j in range(1, n + 1):
        value = value * qint_poly(j)
    return QRational(value)


@lru_cache(maxsize=None)
def qbinomial_poly(n: int, i: int) -> LaurentPoly2:
    """Gaussian binomial ``[n]! / ([i]! [n-i]!)`` as a Laurent polynomial."""
    if i < 0 or i > n:
        raise OutOfRange(f"q-binomial index {i} outside 0..{n}")
    i = min(i, n - i)
    # {n}_i / {i}!  -- the {1} factors of [.]! cancel in pairs
    return QRational.from_factors(
        1, brace_fall_factors(n, i), brace_factorial_factors(i)
    ).reduce()


def qbinomial(n: int, i: int, strict: bool = True) -> QRational:
    """``[n choose i]``.

    With ``strict=False`` an out-of-range ``i`` gives ``0``, which lets sums be
    written over their printed bounds.
    """
    if i < 0 or i > n:
        if strict:
            raise OutOfRange(f"q-binomial index {i} outside 0..{n}")
        return QRational(0)
    return QRational(qbinomial_poly(n, i))
