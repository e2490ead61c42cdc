"""Brute-force Jones polynomials from the Kauffman bracket state sum.

This is deliberately unrelated to the skein-module machinery in the rest of
the package: it resolves every crossing of a planar diagram both ways, counts
loops, and normalizes by the writhe.  It is only used as an outside anchor at
color ``n = 1``.

Conventions: a crossing ``(i, j, k, l)`` lists its four edge labels
counterclockwise starting from the incoming under-edge, as in the PD codes of
the Knot Atlas.  Its A-smoothing joins ``i-j`` and ``k-l``.  With
``d = -A^2 - A^-2`` the Jones polynomial is
``V = (-A^3)^(-writhe) <D>`` at ``A = t^(-1/4)``, which satisfies
``t^-1 V(L+) - t V(L-) = (t^(1/2) - t^(-1/2)) V(L0)``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import product

from .laurent import LaurentPoly1

__all__ = [
    "MalformedDiagram",
    "PlanarDiagram",
    "UNKNOT",
    "LEFT_TREFOIL",
    "RIGHT_TREFOIL",
    "FIGURE_EIGHT",
    "kauffman_bracket",
    "kauffman_oracle",
    "jones_in_t",
]

MAX_CROSSINGS = 8


class MalformedDiagram(ValueError):
    pass


def _infer_sign(x: tuple[int, int, int, int], labels: list[int]) -> int:
    _, j, _, l = x
    succ = {a: b for a, b in zip(labels, labels[1:] + labels[:1])}
    if succ.get(l) == j and succ.get(j) != l:
        return 1
    if succ.get(j) == l and succ.get(l) != j:
        return -1
    raise MalformedDiagram(f"cannot infer the sign of crossing {x}; pass signs explicitly")


@dataclass(frozen=True)
class PlanarDiagram:
    """Crossings in PD form, one sign per crossing, plus split unknotted circles."""

    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]
    free_loops: int = 0

    @classmethod
    def from_pd(cls, crossings, signs=None, free_loops: int = 0) -> "PlanarDiagram":
        crossings = tuple(tuple(int(v) for v in x) for x in crossings)
        if signs is None:
            labels = sorted({v for x in crossings for v in x})
            signs = tuple(_infer_sign(x, labels) for x in crossings)
        d = cls(crossings, tuple(signs), free_loops)
        d.validate()
        return d

    def validate(self) -> None:
        if len(self.crossings) != len(self.signs):
            raise MalformedDiagram("one sign per crossing is required")
        if len(self.crossings) > MAX_CROSSINGS:
            raise MalformedDiagram(
                f"{len(self.crossings)} crossings exceeds the state-sum limit of {MAX_CROSSINGS}"
            )
        if self.free_loops < 0:
            raise MalformedDiagram("negative number of free loops")
        if not self.crossings and not self.free_loops:
            raise MalformedDiagram("empty diagram")
        for x in self.crossings:
            if len(x) != 4:
                raise MalformedDiagram(f"crossing {x} does not have four edges")
        for s in self.signs:
            if s not in (1, -1):
                raise MalformedDiagram(f"crossing sign must be +1 or -1, got {s}")
        uses = Counter(v for x in self.crossings for v in x)
        bad = sorted(v for v, c in uses.items() if c != 2)
        if bad:
            raise MalformedDiagram(f"edge labels {bad} do not appear exactly twice")

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def mirror(self) -> "PlanarDiagram":
        """Swap over and under at every crossing."""
        out = []
        for (i, j, k, l), s in zip(self.crossings, self.signs):
            # the old over-strand becomes the under-strand; start at its incoming edge
            out.append((l, i, j, k) if s > 0 else (j, k, l, i))
        return PlanarDiagram(tuple(out), tuple(-s for s in self.signs), self.free_loops)

    def disjoint_unknot(self) -> "PlanarDiagram":
        return PlanarDiagram(self.crossings, self.signs, self.free_loops + 1)


def _count_loops(pairs: list[tuple[int, int]], labels: list[int]) -> int:
    parent = {v: v for v in labels}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    loops = len(labels)
    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
            loops -= 1
    return loops


def kauffman_bracket(d: PlanarDiagram) -> LaurentPoly1:
    """Bracket in the variable ``A``, normalized so one circle is ``1``."""
    d.validate()
    labels = sorted({v for x in d.crossings for v in x})
    delta = LaurentPoly1({2: -1, -2: -1}, "A")
    counts: dict = defaultdict(int)
    for state in product((1, -1), repeat=len(d.crossings)):
        pairs = []
        for (i, j, k, l), s in zip(d.crossings, state):
            if s > 0:
                pairs += [(i, j), (k, l)]
            else:
                pairs += [(i, l), (j, k)]
        loops = (_count_loops(pairs, labels) if labels else 0) + d.free_loops
        counts[(sum(state), loops)] += 1
    total = LaurentPoly1({}, "A")
    for (e, loops), c in counts.items():
        total = total + LaurentPoly1({e: c}, "A") * delta ** (loops - 1)
    return total


def kauffman_oracle(d: PlanarDiagram) -> LaurentPoly1:
    """Jones polynomial with doubled exponents: variable ``s`` with ``s^2 = t``."""
    w = d.writhe
    bracket = kauffman_bracket(d) * LaurentPoly1({-3 * w: -1 if w & 1 else 1}, "A")
    out = {}
    for e, c in bracket.terms.items():
        if e % 2:
            raise MalformedDiagram("odd A-exponent after normalization")
        # A^e = t^(-e/4) = s^(-e/2)
        out[-e // 2] = c
    return LaurentPoly1(out, "s")


def jones_in_t(d: PlanarDiagram) -> LaurentPoly1:
    """Jones polynomial in ``t``; only defined when all exponents are integral."""
    v = kauffman_oracle(d)
    if any(e % 2 for e in v.terms):
        raise MalformedDiagram("half-integral exponents; use kauffman_oracle")
    return LaurentPoly1({e // 2: c for e, c in v.terms.items()}, "t")


UNKNOT = PlanarDiagram((), (), free_loops=1)
# Knot Atlas 3_1: three negative crossings
LEFT_TREFOIL = PlanarDiagram.from_pd([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)])
RIGHT_TREFOIL = LEFT_TREFOIL.mirror()
FIGURE_EIGHT = PlanarDiagram.from_pd([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)])
