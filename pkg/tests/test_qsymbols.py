import pytest

from coloredhomfly.qsymbols import (
    NegativeLength,
    OutOfRange,
    brace,
    brace_factorial,
    brace_fall,
    braceA,
    braceA_fall,
    braceA_rise,
    qbinomial,
    qbinomial_poly,
    qint,
    qint_factorial,
    qint_poly,
)


def test_qint_examples(aq):
    a, q = aq
    assert qint(0).is_zero()
    assert qint(1) == 1
    assert qint(2) == q + q**-1
    assert qint(-3) == -qint_poly(3)


def test_brace_examples(aq):
    a, q = aq
    assert brace(0).is_zero()
    assert braceA(0) == a - a**-1
    assert brace(-2) == -brace(2)


def test_products(aq):
    for n in range(-3, 5):
        assert brace_fall(n, 0) == 1
        assert braceA_fall(n, 0) == 1
        assert braceA_rise(n, 0) == 1
    assert brace_fall(2, 2) == brace(2) * brace(1)
    assert braceA_rise(2, 2) == braceA(-2) * braceA(-1)
    assert braceA_fall(2, 3) == braceA(2) * braceA(1) * braceA(0)
    with pytest.raises(NegativeLength):
        brace_fall(3, -1)
    with pytest.raises(NegativeLength):
        braceA_rise(3, -1)


def test_factorials():
    assert brace_factorial(0) == 1
    assert brace_factorial(3) == brace(3) * brace(2) * brace(1)
    assert qint_factorial(3) == qint_poly(3) * qint_poly(2)
    assert qint_factorial(0) == 1


def test_qbinomial_examples(aq):
    a, q = aq
    for n in range(6):
        assert qbinomial(n, 0) == 1
        assert qbinomial(n, n) == 1
    assert qbinomial(2, 1) == q + q**-1
    assert qbinomial_poly(4, 2) == q**4 + q**2 + 2 + q**-2 + q**-4
    with pytest.raises(OutOfRange):
        qbinomial(2, 3)
    with pytest.raises(OutOfRange):
        qbinomial(2, -1)
    assert qbinomial(2, 3, strict=False).is_zero()


@pytest.mark.parametrize("n", range(9))
def test_qbinomial_is_factorial_ratio(n):
    for i in range(n + 1):
        lhs = qint_factorial(n)
        rhs = qint_factorial(i) * qint_factorial(n - i) * qbinomial(n, i)
        assert lhs == rhs


def test_qbinomial_is_symmetric_and_bar_invariant():
    for n in range(10):
        for i in range(n + 1):
            b = qbinomial_poly(n, i)
            assert b == qbinomial_poly(n, n - i)
            assert b.mirror() == b
            assert b.evaluate(1, 1) == __import__("math").comb(n, i)


def test_brace_fall_vanishing():
    for n in range(7):
        for i in range(9):
            assert brace_fall(n, i).is_zero() == (n < i)


def test_brace_a_fall_never_vanishes_identically():
    for n in range(-4, 5):
        for i in range(5):
            assert not braceA_fall(n, i).is_zero()
