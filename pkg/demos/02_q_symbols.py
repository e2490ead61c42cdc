"""
Quantum integers and brace products
===================================

{n} = q^n - q^-n, {n;a} = a q^n - a^-1 q^-n and [n] = {n}/{1}.
"""

from coloredhomfly.qsymbols import (
    brace,
    brace_fall,
    braceA,
    braceA_fall,
    braceA_rise,
    qbinomial_poly,
    qint,
)

for n in range(5):
    print(f"[{n}] =", qint(n))

# %%
# Falling products step the index down.  They vanish exactly when 0 <= n < i,
# which is what cuts many sums short.
print("{2}_3   =", brace_fall(2, 3))
print("{4}_2   =", brace_fall(4, 2))
print("{2;a}_2 =", braceA_fall(2, 2))

# %%
# The rising product starts at a negated index: {-2;a}{-1;a}.
print("{-2;a}_2 rising =", braceA_rise(2, 2))
print("equals product :", braceA_rise(2, 2) == braceA(-2) * braceA(-1))

# %%
# Gaussian binomials are palindromic Laurent polynomials in q.
for n in range(5):
    print(" ".join(str(qbinomial_poly(n, i)).rjust(1) for i in range(n + 1)))

# %%
# A handy identity that shows up everywhere below.
m, n, i = 4, 3, 2
lhs = braceA(m - 1) * braceA(n - 1)
rhs = braceA(m + n - i - 1) * braceA(i - 1) + brace(m - i) * brace(n - i)
print("{m-1;a}{n-1;a} identity holds:", lhs == rhs)
