"""Named scalar families of the symmetrizer calculus.

Every function takes concrete integer indices and returns an exact value:
:class:`QRational` for the families that are genuinely rational, and
:class:`LaurentPoly2` for ``theta``, ``eta``, ``lambda_`` and the twist
eigenvalues.

Sums are put over one common denominator (the multiset lcm of the term
denominators) and returned unreduced; call ``.reduce()`` or ``.simplify()``
when a polynomial is wanted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .laurent import FactorProduct, LaurentPoly2, QFactor, QRational, multiply_factors
from .qsymbols import (
    braceA_fall_factors,
    braceA_rise_factors,
    brace_factorial_factors,
    brace_fall_factors,
    qbinomial_poly,
)

__all__ = [
    "CoeffQuery",
    "coefficient",
    "x_coeff",
    "alpha",
    "alpha_bar",
    "beta",
    "y_coeff",
    "epsilon",
    "eta",
    "sigma",
    "tau",
    "tau_raw",
    "theta",
    "bracket_H",
    "bracket_E",
    "bracket_D",
    "bracket_D_sum",
    "twist_eigen_H",
    "twist_eigen_E",
    "twist_eigen_D",
    "t_coeff",
    "t_bar",
    "s_p",
    "t_p",
    "T_sym",
    "T_omega",
    "T_yx",
    "kappa",
    "lambda_",
    "eigen_expansion_terms",
]

_fall = brace_fall_factors
_fallA = braceA_fall_factors
_riseA = braceA_rise_factors
_fact = brace_factorial_factors


def _mono(c: int, e_a: int, e_q: int) -> LaurentPoly2:
    return LaurentPoly2.monomial(c, e_a, e_q)


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


def _fsum(terms: Iterable[tuple[LaurentPoly2, FactorProduct, FactorProduct]]) -> QRational:
    """Sum of ``coeff * prod(num) / prod(den)`` over one lcm denominator."""
    reduced = []
    den = FactorProduct()
    for coeff, nf, df in terms:
        if not coeff or any(f.is_zero() for f in nf.distinct()):
            continue
        common = nf.gcd(df)
        nf, df = nf - common, df - common
        reduced.append((coeff, nf, df))
        den = den.lcm(df)
    total = LaurentPoly2()
    for coeff, nf, df in reduced:
        total = total + multiply_factors(multiply_factors(coeff, nf), den - df)
    return QRational(total, den)


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise IndexError(what)


# ---------------------------------------------------------------------------
# expansion coefficients


@lru_cache(maxsize=None)
def x_coeff(m: int, n: int, i: int) -> QRational:
    """Coefficient of the ``i``-th term of the (m,n) symmetrizer expansion."""
    _check(0 <= i <= min(m, n), f"x_coeff needs 0 <= i <= min(m, n), got {(m, n, i)}")
    coeff = qbinomial_poly(m, i) * qbinomial_poly(n, i) * _sign(i)
    return QRational.from_factors(coeff, _fact(i), _fallA(m + n - 2, i))


@lru_cache(maxsize=None)
def alpha(m: int, n: int, i: int) -> QRational:
    _check(0 <= i <= min(m, n), f"alpha needs 0 <= i <= min(m, n), got {(m, n, i)}")
    e_q = -i * (m + n) + i * (i + 3) // 2
    return QRational.from_factors(
        _mono(_sign(i), -i, e_q), _fall(m, i) * _fall(n, i), _fact(i)
    )


def alpha_bar(m: int, n: int, i: int) -> QRational:
    """``alpha`` with ``a, q`` replaced by their inverses."""
    return alpha(m, n, i).mirror()


@lru_cache(maxsize=None)
def beta(i: int, j: int, m: int, n: int, k: int, variant: str = "plain") -> QRational:
    _check(
        0 <= k <= i <= j <= min(m, n),
        f"beta needs 0 <= k <= i <= j <= min(m, n), got {(i, j, m, n, k)}",
    )
    if variant == "antisym":
        return beta(i, j, m, n, k).q_to_neg_inverse()
    if variant != "plain":
        raise ValueError(f"unknown beta variant {variant!r}")
    num = _fall(m - j, k) * _fall(n - j, k) * _fall(j, i - k) * _fallA(m + n - j - k - 1, i - k)
    return QRational.from_factors(qbinomial_poly(i, k), num, _fall(m, i) * _fall(n, i))


@lru_cache(maxsize=None)
def y_coeff(m: int, n: int, i: int) -> QRational:
    _check(0 <= i <= min(m, n), f"y_coeff needs 0 <= i <= min(m, n), got {(m, n, i)}")
    return QRational.from_factors(
        1, _fall(m, i) * _fall(n, i), _fact(i) * _fallA(m + n - i - 1, i)
    )


# ---------------------------------------------------------------------------
# encircling eigenvalues on D_{n,n}


def epsilon(i: int, n: int, j: int, k: int) -> int:
    """q-exponent of the cross terms of ``sigma``; depends on ``i`` and ``n`` too."""
    return (k - j) * (i + n) + j * (j + 3) // 2 - k * (k + 3) // 2


@lru_cache(maxsize=None)
def eta(n: int, k: int) -> LaurentPoly2:
    return multiply_factors(LaurentPoly2.const(1), [QFactor.brace(n - k), QFactor.brace_a(n + k - 1)])


@lru_cache(maxsize=None)
def sigma(n: int, i: int) -> QRational:
    """Eigenvalue of encircling ``D_{n,n}`` by ``H_i``."""
    _check(n >= 0 and i >= 0, f"sigma needs n, i >= 0, got {(n, i)}")
    terms = []
    for k in range(i + 1):
        for j in range(min(k, i - k + 1)):
            # j < k and j + k <= i
            coeff = _mono(_sign(j), k - j, epsilon(i, n, j, k)) + _mono(
                _sign(k), j - k, epsilon(i, n, k, j)
            )
            terms.append(
                (coeff, _fall(n, j) * _fall(n, k) * _fallA(i - 1, i - j - k), _fact(i - j - k))
            )
    for j in range(i // 2 + 1):
        terms.append(
            (
                LaurentPoly2.const(_sign(j)),
                _fall(n, j) * _fall(n, j) * _fallA(i - 1, i - 2 * j),
                _fact(i - 2 * j),
            )
        )
    return _fsum(terms)


@lru_cache(maxsize=None)
def tau(n: int, i: int) -> QRational:
    """Eigenvalue of encircling ``D_{n,n}`` by ``E_i``.

    At ``i = 0`` the second term would need a product of length ``-1``; it is
    taken to be zero so that ``tau(n, 0) == 1``.
    """
    _check(n >= 0 and i >= 0, f"tau needs n, i >= 0, got {(n, i)}")
    terms = [(LaurentPoly2.const(1), _riseA(i - 1, i), _fact(i))]
    if i >= 1:
        terms.append(
            (
                LaurentPoly2.const(1),
                _riseA(i, i - 1) * FactorProduct([QFactor.brace(n), QFactor.brace_a(n - 1)]),
                _fact(i - 1),
            )
        )
    return _fsum(terms)


@lru_cache(maxsize=None)
def tau_raw(n: int, i: int) -> QRational:
    """``tau`` before simplification: three diagram contributions."""
    _check(n >= 0 and i >= 0, f"tau_raw needs n, i >= 0, got {(n, i)}")
    if i == 0:
        return QRational(1)
    one = LaurentPoly2.const(1)
    first = QRational.from_factors(one, _riseA(i - 1, i), _fact(i))
    second = QRational.from_factors(
        one,
        FactorProduct([QFactor.brace_a(n - i), QFactor.brace(i), QFactor.brace(n)])
        * _riseA(i - 1, i - 1),
        FactorProduct([QFactor.brace(1)]) * _fall(i, i - 1),
    )
    total = first + second
    if i >= 2:
        third = beta(i - 1, i - 1, i, i, 1, "antisym").mul_factors(
            [QFactor.brace(i), QFactor.brace(i), QFactor.brace(n), QFactor.brace(n)], -1
        ).div_factors([QFactor.brace(1), QFactor.brace(1)])
        total = total + third
    return total


@lru_cache(maxsize=None)
def theta(n: int, i: int) -> LaurentPoly2:
    """Eigenvalue of encircling ``D_{n,n}`` by ``R_i``; zero once ``i > n``."""
    _check(n >= 0 and i >= 0, f"theta needs n, i >= 0, got {(n, i)}")
    return (_fall(n, i) * _fallA(n + i - 2, i)).expand()


# ---------------------------------------------------------------------------
# evaluations in S^3 and twist eigenvalues


@lru_cache(maxsize=None)
def bracket_H(n: int) -> QRational:
    _check(n >= 0, f"bracket_H needs n >= 0, got {n}")
    return QRational.from_factors(1, _fallA(n - 1, n), _fact(n))


@lru_cache(maxsize=None)
def bracket_E(n: int) -> QRational:
    _check(n >= 0, f"bracket_E needs n >= 0, got {n}")
    return QRational.from_factors(1, _riseA(n - 1, n), _fact(n))


@lru_cache(maxsize=None)
def bracket_D(m: int, n: int) -> QRational:
    """Closed form of the evaluation of ``D_{m,n}``, ``m >= n``.

    ``D_{m,0}`` is ``H_m``.
    """
    _check(m >= n >= 0, f"bracket_D needs m >= n >= 0, got {(m, n)}")
    if n == 0:
        return bracket_H(m)
    num = (
        FactorProduct([QFactor.brace_a(m + n - 1), QFactor.brace_a(-1)])
        * _fallA(m - 2, m - 1)
        * _fallA(n - 2, n - 1)
    )
    return QRational.from_factors(1, num, _fact(m) * _fact(n))


@lru_cache(maxsize=None)
def bracket_D_sum(m: int, n: int) -> QRational:
    """Evaluation of ``D_{m,n}`` straight from the symmetrizer expansion."""
    _check(m >= 0 and n >= 0, f"bracket_D_sum needs m, n >= 0, got {(m, n)}")
    terms = []
    for i in range(min(m, n) + 1):
        x = x_coeff(m, n, i)
        terms.append(
            (
                x.num,
                _fallA(m - 1, m - i) * _fallA(n - 1, n - i) * _fallA(i - 1, i),
                x.den * _fall(m, m - i) * _fall(n, n - i) * _fact(i),
            )
        )
    return _fsum(terms)


def twist_eigen_H(n: int) -> LaurentPoly2:
    return _mono(1, n, n * (n - 1))


def twist_eigen_E(n: int) -> LaurentPoly2:
    # (-q)^(-n(n-1)); n(n-1) is even
    return _mono(1, n, -n * (n - 1))


def twist_eigen_D(m: int, n: int) -> LaurentPoly2:
    return _mono(1, m + n, m * (m - 1) + n * (n - 1))


# ---------------------------------------------------------------------------
# twisting coefficients


@lru_cache(maxsize=None)
def t_coeff(i: int) -> QRational:
    _check(i >= 0, f"t_coeff needs i >= 0, got {i}")
    return QRational.from_factors(_mono(1, i, i * (i - 1) // 2), (), _fact(i))


@lru_cache(maxsize=None)
def t_bar(i: int) -> QRational:
    _check(i >= 0, f"t_bar needs i >= 0, got {i}")
    return QRational.from_factors(_mono(_sign(i), -i, -(i * (i - 1) // 2)), (), _fact(i))


@lru_cache(maxsize=None)
def s_p(i: int, p: int) -> QRational:
    """Coefficient ``s_{i,p}`` of the twist-knot double sum (simplified)."""
    _check(i >= 0, f"s_p needs i >= 0, got {i}")
    terms = []
    for k in range(i + 1):
        terms.append(
            (
                _mono(_sign(k), 2 * p * k, 2 * p * k * (k - 1)),
                FactorProduct([QFactor.brace_a(2 * k - 1)]),
                _fact(k) * _fact(i - k) * _fallA(i + k - 1, i + 1),
            )
        )
    return _fsum(terms).simplify()


def t_p(i: int, p: int) -> QRational:
    """Coefficient of ``R_i`` in the element realizing ``p`` full twists."""
    return s_p(i, p) * _sign(i)


@lru_cache(maxsize=None)
def T_sym(n: int, p: int) -> QRational:
    """``T_{n,p}`` through the (n-i, n-i) symmetrizers, closed sum form."""
    _check(n >= 0, f"T_sym needs n >= 0, got {n}")
    terms = []
    for i in range(n + 1):
        terms.append(
            (
                _mono(_sign(i), 2 * p * (i - n), 2 * p * (i * (i - 1) - n * (n - 1))),
                _fact(n) * _fall(n, n - i) * FactorProduct([QFactor.brace_a(2 * i - 1)]),
                _fact(n - i) * _fallA(n + i - 1, n + 1),
            )
        )
    return _fsum(terms)


@lru_cache(maxsize=None)
def T_yx(n: int, p: int) -> QRational:
    """``T_{n,p}`` as ``sum_i y^i_{n,n} (twist)^{2p} x^{n-i}_{n-i,n-i}``."""
    _check(n >= 0, f"T_yx needs n >= 0, got {n}")
    total = QRational(0)
    for i in range(n + 1):
        twist = _mono(1, -2 * p * i, -2 * p * (i * (i - 1) + 2 * i * (n - i)))
        total = total + y_coeff(n, n, i) * x_coeff(n - i, n - i, n - i) * twist
    return total


@lru_cache(maxsize=None)
def T_omega(n: int, p: int) -> QRational:
    """``T_{n,p}`` by encircling with the twist element."""
    _check(n >= 0, f"T_omega needs n >= 0, got {n}")
    coeff = _mono(_sign(n), -2 * p * n, -2 * p * n * (n - 1))
    return t_p(n, p).mul_factors(_fact(n) * _fact(n), coeff)


# ---------------------------------------------------------------------------
# the triangle behind the omega eigenvalue identity


def kappa(i: int, j: int, n: int) -> int:
    return 2 * n * (n - 1) - n * (i + j) - i * (i - 3) // 2 + j * (j + 1) // 2


@lru_cache(maxsize=None)
def lambda_(i: int, j: int, n: int) -> LaurentPoly2:
    """Entry ``(i, j)`` of the splitting triangle whose rows sum to ``a^2n q^2n(n-1)``."""
    _check(0 <= j <= i <= n, f"lambda needs 0 <= j <= i <= n, got {(i, j, n)}")
    coeff = qbinomial_poly(i, j).shift(2 * n - i - j, kappa(i, j, n))
    return multiply_factors(coeff, _fallA(n + i - j - 2, i - j))


def eigen_expansion_terms(n: int) -> list[LaurentPoly2]:
    """Summands ``a^i q^(i(i-1)/2) [n, i] {n+i-2;a}_i`` for ``i = 0..n``."""
    return [
        multiply_factors(
            qbinomial_poly(n, i).shift(i, i * (i - 1) // 2), _fallA(n + i - 2, i)
        )
        for i in range(n + 1)
    ]


# ---------------------------------------------------------------------------
# dispatch


_FAMILIES = {
    "x": x_coeff,
    "alpha": alpha,
    "alpha_bar": alpha_bar,
    "beta": beta,
    "y": y_coeff,
    "epsilon": epsilon,
    "eta": eta,
    "sigma": sigma,
    "tau": tau,
    "tau_raw": tau_raw,
    "theta": theta,
    "bracket_H": bracket_H,
    "bracket_E": bracket_E,
    "bracket_D": bracket_D,
    "bracket_D_sum": bracket_D_sum,
    "t": t_coeff,
    "t_bar": t_bar,
    "s": s_p,
    "t_p": t_p,
    "T_sym": T_sym,
    "T_omega": T_omega,
    "T_yx": T_yx,
    "kappa": kappa,
    "lambda": lambda_,
}


@dataclass(frozen=True)
class CoeffQuery:
    family: str
    indices: tuple[int, ...]

    def evaluate(self):
        try:
            fn = _FAMILIES[self.family]
        except KeyError:
            raise KeyError(f"unknown coefficient family {self.family!r}") from None
        return fn(*self.indices)


def coefficient(family: str, *indices: int):
    """``coefficient("sigma", 2, 3)`` is ``sigma(2, 3)``."""
    return CoeffQuery(family, tuple(indices)).evaluate()
