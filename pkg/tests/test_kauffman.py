import pytest

from coloredhomfly.kauffman import (
    FIGURE_EIGHT,
    LEFT_TREFOIL,
    RIGHT_TREFOIL,
    UNKNOT,
    MalformedDiagram,
    PlanarDiagram,
    jones_in_t,
    kauffman_bracket,
    kauffman_oracle,
)
from coloredhomfly.laurent import LaurentPoly1


def t(text):
    return LaurentPoly1.parse(text, "t")


def test_oracle_examples():
    assert jones_in_t(UNKNOT) == LaurentPoly1({0: 1}, "t")
    assert jones_in_t(FIGURE_EIGHT) == t("t^2 - t + 1 - t^-1 + t^-2")
    # all-negative diagram; its mirror is the right-handed trefoil
    assert jones_in_t(LEFT_TREFOIL) == t("-t^-4 + t^-3 + t^-1")
    assert jones_in_t(RIGHT_TREFOIL) == t("-t^4 + t^3 + t")


def test_oracle_stores_doubled_exponents():
    v = kauffman_oracle(FIGURE_EIGHT)
    assert v.var == "s"
    assert set(v.terms) == {4, 2, 0, -2, -4}


def test_builtin_diagrams():
    assert len(LEFT_TREFOIL.crossings) == 3 and LEFT_TREFOIL.writhe == -3
    assert len(FIGURE_EIGHT.crossings) == 4 and FIGURE_EIGHT.writhe == 0


def test_mirror_inverts_t():
    for d in (LEFT_TREFOIL, FIGURE_EIGHT):
        assert jones_in_t(d.mirror()) == jones_in_t(d).mirror()


def test_reidemeister_one_kink_is_invisible():
    kink = PlanarDiagram.from_pd([(1, 2, 2, 1)], signs=[-1])
    assert jones_in_t(kink) == LaurentPoly1({0: 1}, "t")
    assert jones_in_t(kink.mirror()) == LaurentPoly1({0: 1}, "t")


def test_disjoint_unknot_multiplies_bracket_by_loop_value():
    delta = LaurentPoly1({2: -1, -2: -1}, "A")
    for d in (UNKNOT, LEFT_TREFOIL, FIGURE_EIGHT):
        assert kauffman_bracket(d.disjoint_unknot()) == delta * kauffman_bracket(d)


def test_two_component_unlink_jones():
    # -(t^1/2 + t^-1/2)
    assert kauffman_oracle(UNKNOT.disjoint_unknot()) == LaurentPoly1({1: -1, -1: -1}, "s")


@pytest.mark.parametrize(
    "crossings, signs",
    [
        ([(1, 2, 3, 4)], [1]),
        ([(1, 2, 2)], [1]),
        ([(1, 2, 2, 1)], [2]),
        ([(1, 2, 2, 1)], [1, 1]),
        ([], []),
        ([(i, i + 1, i + 1, i) for i in range(1, 19, 2)], [1] * 9),
    ],
)
def test_malformed(crossings, signs):
    with pytest.raises(MalformedDiagram):
        PlanarDiagram.from_pd(crossings, signs=signs)


def test_half_integral_exponents_refused_in_t():
    with pytest.raises(MalformedDiagram):
        jones_in_t(UNKNOT.disjoint_unknot())
