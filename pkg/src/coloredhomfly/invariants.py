"""Colored HOMFLY-PT polynomials of twist knots.

``K_p`` is the twist knot with ``p`` full twists in its clasp region.  ``K_1``
is the left-handed trefoil, ``K_-1`` the figure-eight and ``K_0`` the unknot.
The color ``n`` is the number of strands carried by the ``n``-th
q-symmetrizer.  Results are normalized to ``1`` on the zero-framed unknot.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from .coefficients import s_p, t_p
from .laurent import LaurentPoly1, LaurentPoly2, QRational, multiply_factors
from .qsymbols import braceA_fall_factors, brace_factorial_factors, qbinomial_poly

__all__ = [
    "TwistKnotQuery",
    "BasisChange",
    "InvariantResult",
    "h_to_r",
    "omega_coeffs",
    "colored_homfly_twist",
    "colored_homfly_trefoil",
    "colored_homfly_fig8",
    "colored_jones",
    "compute",
]


@dataclass(frozen=True)
class TwistKnotQuery:
    p: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"color must be non-negative, got {self.n}")


@dataclass(frozen=True)
class BasisChange:
    """``H_i = sum_j forward[i][j] R_j`` and ``R_i = sum_j inverse[i][j] H_j``.

    Both tables are lower triangular with unit diagonal; row ``i`` has
    ``i + 1`` entries.
    """

    size: int
    forward: tuple[tuple[QRational, ...], ...]
    inverse: tuple[tuple[QRational, ...], ...]


@dataclass(frozen=True)
class InvariantResult:
    query: TwistKnotQuery
    polynomial: LaurentPoly2
    term_count: int
    timing: float = field(compare=False)


def _h_coeff(i: int, j: int) -> QRational:
    # {i-1+j;a}_{i-j} / {i-j}!
    return QRational.from_factors(1, braceA_fall_factors(i - 1 + j, i - j), brace_factorial_factors(i - j))


@lru_cache(maxsize=None)
def h_to_r(n: int) -> BasisChange:
    """The change of basis between ``H_0..H_n`` and ``R_0..R_n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    forward = tuple(tuple(_h_coeff(i, j) for j in range(i + 1)) for i in range(n + 1))
    inverse: list[tuple[QRational, ...]] = []
    for i in range(n + 1):
        # R_i = H_i - sum_{k<i} forward[i][k] R_k
        row = [QRational(0)] * (i + 1)
        row[i] = QRational(1)
        for k in range(i):
            c = forward[i][k]
            for j, d in enumerate(inverse[k]):
                if d.is_zero():
                    continue
                row[j] = (row[j] - c * d).simplify()
        inverse.append(tuple(row))
    return BasisChange(n + 1, forward, tuple(inverse))


def omega_coeffs(n: int, p: int) -> list[QRational]:
    """``(t_{0,p}, ..., t_{n,p})``: coordinates of the twist element in the R basis."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return [t_p(i, p) for i in range(n + 1)]


def _twist_term(n: int, i: int, p: int) -> QRational:
    # a^i q^{i(i-1)/2} {i}! s_{i,p} [n i] {n+i-1;a}_i {i-2;a}_i
    coeff = qbinomial_poly(n, i).shift(i, i * (i - 1) // 2)
    factors = brace_factorial_factors(i) * braceA_fall_factors(n + i - 1, i) * braceA_fall_factors(i - 2, i)
    return s_p(i, p).mul_factors(factors, coeff).simplify()


@lru_cache(maxsize=None)
def colored_homfly_twist(n: int, p: int, shortcut: bool = True) -> LaurentPoly2:
    """``H_n(K_p)`` from the double sum over ``i`` and the inner index of ``s_{i,p}``.

    Raises :class:`~coloredhomfly.laurent.NotDivisible` if the sum fails to
    cancel to a polynomial, which would mean a bug rather than a legal result.
    """
    if n < 0:
        raise ValueError(f"color must be non-negative, got {n}")
    if p == 0 and shortcut:
        return LaurentPoly2.const(1)
    total = QRational(0)
    for i in range(n + 1):
        total = total + _twist_term(n, i, p)
    return total.reduce()


def _single_sum(n: int, sign_twist: bool) -> LaurentPoly2:
    if n < 0:
        raise ValueError(f"color must be non-negative, got {n}")
    total = LaurentPoly2()
    for i in range(n + 1):
        coeff = qbinomial_poly(n, i)
        if sign_twist:
            coeff = coeff.shift(2 * i, i * (i - 1), -1 if i & 1 else 1)
        total = total + multiply_factors(
            coeff, braceA_fall_factors(n + i - 1, i) * braceA_fall_factors(i - 2, i)
        )
    return total


@lru_cache(maxsize=None)
def colored_homfly_trefoil(n: int) -> LaurentPoly2:
    """``H_n`` of the left-handed trefoil as a single sum."""
    return _single_sum(n, True)


@lru_cache(maxsize=None)
def colored_homfly_fig8(n: int) -> LaurentPoly2:
    """``H_n`` of the figure-eight knot as a single sum."""
    return _single_sum(n, False)


def colored_jones(n: int, p: int, N: int = 2) -> LaurentPoly1:
    """Specialize ``a = q^N``; ``N = 2`` is the colored Jones polynomial."""
    if N < 2:
        raise ValueError(f"N must be at least 2, got {N}")
    return colored_homfly_twist(n, p).substitute_a(N)


def compute(query: TwistKnotQuery) -> InvariantResult:
    start = time.perf_counter()
    poly = colored_homfly_twist(query.n, query.p)
    return InvariantResult(query, poly, len(poly), time.perf_counter() - start)
