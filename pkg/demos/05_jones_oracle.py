"""
An independent check against the Kauffman bracket
=================================================

The state sum over all 2^c smoothings of a planar diagram has nothing to do
with the skein computation, so matching it at color 1 is real evidence.
"""

from coloredhomfly import colored_jones
from coloredhomfly.kauffman import FIGURE_EIGHT, LEFT_TREFOIL, PlanarDiagram, jones_in_t
from coloredhomfly.verify import resolve_jones_convention

for name, d in [("left trefoil", LEFT_TREFOIL), ("right trefoil", LEFT_TREFOIL.mirror()), ("figure-eight", FIGURE_EIGHT)]:
    print(f"{name:14s} V(t) =", jones_in_t(d))

# %%
# Which substitution t = q^(+-2) turns H_1 at a = q^2 into the oracle's answer?
report = resolve_jones_convention()
print(report.per_knot)
print("convention:", report.convention)

# %%
# Under that convention the two pipelines agree term by term.
print(jones_in_t(LEFT_TREFOIL).rescale(-2, "q"), "==", colored_jones(1, 1))

# %%
# Diagrams are plain PD codes; signs are inferred when the labels allow it.
# A one-crossing loop is too short to infer, so its sign is given.
kink = PlanarDiagram.from_pd([(1, 2, 2, 1)], signs=[-1])
print("kinked unknot:", jones_in_t(kink), "and mirrored:", jones_in_t(kink.mirror()))
