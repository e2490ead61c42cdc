"""
Colored HOMFLY-PT of twist knots
================================

K_p has p full twists: K_1 is the left-handed trefoil, K_-1 the figure-eight
and K_0 the unknot.  Results are normalized to 1 on the unknot.
"""

import time

from coloredhomfly import (
    colored_homfly_fig8,
    colored_homfly_trefoil,
    colored_homfly_twist,
    colored_jones,
)

for p in range(-2, 3):
    print(f"H_1(K_{p}) =", colored_homfly_twist(1, p))

# %%
# Higher colors grow quickly but stay exact.
for n in range(1, 6):
    start = time.perf_counter()
    h = colored_homfly_twist(n, -2)
    print(f"n={n}: {len(h):4d} terms in {time.perf_counter() - start:.3f}s")

# %%
# The general double sum agrees with the dedicated single sums.
n = 4
print("trefoil :", colored_homfly_twist(n, 1) == colored_homfly_trefoil(n))
print("fig-8   :", colored_homfly_twist(n, -1) == colored_homfly_fig8(n))
print("fig-8 is mirror symmetric:", colored_homfly_fig8(n).mirror() == colored_homfly_fig8(n))

# %%
# a = q^N gives the sl(N) invariant; N = 2 is the colored Jones polynomial.
print("J_2(4_1) =", colored_jones(2, -1))
print("sl3, 3_1 :", colored_jones(1, 1, N=3))
