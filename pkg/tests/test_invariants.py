import pytest

from coloredhomfly.invariants import (
    TwistKnotQuery,
    colored_homfly_fig8,
    colored_homfly_trefoil,
    colored_homfly_twist,
    colored_jones,
    compute,
    h_to_r,
    omega_coeffs,
)
from coloredhomfly.coefficients import t_bar, t_coeff
from coloredhomfly.laurent import LaurentPoly1, QFactor, QRational, parse_poly
from coloredhomfly.qsymbols import brace_factorial_factors, braceA

FIG8_1 = "a^2 - q^2 + 1 - q^-2 + a^-2"
TREFOIL_1 = "-a^4 + a^2*q^2 + a^2*q^-2"


def test_color_zero_is_trivial():
    for p in range(-3, 4):
        assert colored_homfly_twist(0, p) == 1
        assert colored_jones(0, p, 3) == LaurentPoly1({0: 1})
    assert colored_homfly_fig8(0) == 1
    assert colored_homfly_trefoil(0) == 1


def test_color_one(aq):
    assert str(colored_homfly_twist(1, -1)) == FIG8_1
    assert colored_homfly_twist(1, -1) == parse_poly("a^2 + a^-2 + 1 - q^2 - q^-2")
    assert str(colored_homfly_twist(1, 1)) == TREFOIL_1
    assert colored_homfly_fig8(1) == 1 + braceA(1) * braceA(-1)
    assert str(colored_homfly_trefoil(1)) == TREFOIL_1


def test_colored_jones_examples():
    assert colored_jones(1, -1) == LaurentPoly1.parse("q^4 + q^-4 - q^2 - q^-2 + 1")
    assert colored_jones(1, 1) == LaurentPoly1.parse("q^6 + q^2 - q^8")
    with pytest.raises(ValueError):
        colored_jones(1, 1, 1)


def test_unknot_through_the_sum():
    for n in range(6):
        assert colored_homfly_twist(n, 0, shortcut=False) == 1


@pytest.mark.parametrize("n", range(6))
def test_double_sum_matches_single_sums(n):
    assert colored_homfly_twist(n, 1) == colored_homfly_trefoil(n)
    assert colored_homfly_twist(n, -1) == colored_homfly_fig8(n)


def test_figure_eight_amphichiral():
    for n in range(6):
        h = colored_homfly_fig8(n)
        assert h.mirror() == h


def test_trefoil_is_chiral():
    h = colored_homfly_trefoil(2)
    assert h.mirror() != h


def test_at_q_equal_a_is_one():
    for n in range(4):
        for p in (-2, 1, 3):
            assert colored_homfly_twist(n, p).substitute_a(1) == LaurentPoly1({0: 1})


def test_basis_change():
    assert h_to_r(0).forward == ((QRational(1),),)
    b = h_to_r(4)
    for i in range(5):
        assert b.forward[i][i] == 1
        assert b.inverse[i][i] == 1
        assert len(b.forward[i]) == i + 1


def test_omega_coeffs(aq):
    a, q = aq
    assert omega_coeffs(0, 5) == [1]
    assert omega_coeffs(3, 1) == [t_coeff(i) for i in range(4)]
    want = [
        QRational(1),
        QRational(-(a**-1), [QFactor.brace(1)]),
        QRational.from_factors(a**-2 * q**-1, [], brace_factorial_factors(2)),
    ]
    assert omega_coeffs(2, -1) == want
    assert omega_coeffs(2, -1) == [t_bar(i) for i in range(3)]


def test_query_and_compute():
    with pytest.raises(ValueError):
        TwistKnotQuery(p=1, n=-1)
    res = compute(TwistKnotQuery(p=-1, n=1))
    assert str(res.polynomial) == FIG8_1
    assert res.term_count == 5


def test_negative_color_rejected():
    with pytest.raises(ValueError):
        colored_homfly_twist(-1, 2)


@pytest.mark.parametrize("n, p", [(2, 2), (3, -2), (3, 3), (4, -1)])
def test_reduction_agrees_with_pointwise_evaluation(n, p):
    # evaluating the unreduced terms at exact rationals bypasses all cancellation
    from fractions import Fraction

    from coloredhomfly.invariants import _twist_term

    for a, q in [(Fraction(3, 2), Fraction(5, 7)), (Fraction(-2), Fraction(4, 3))]:
        total = Fraction(0)
        for i in range(n + 1):
            r = _twist_term(n, i, p)
            total += Fraction(r.num.evaluate(a, q)) / r.den.expand().evaluate(a, q)
        assert total == colored_homfly_twist(n, p).evaluate(a, q)
