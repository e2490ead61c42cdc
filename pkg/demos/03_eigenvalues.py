"""
Encircling eigenvalues and twisting coefficients
================================================

sigma, tau and theta are the eigenvalues of wrapping H_i, E_i and R_i around
a core carrying the (n, n) idempotent.  theta is always a polynomial and
vanishes beyond i = n.
"""

from coloredhomfly import coefficients as C
from coloredhomfly.invariants import h_to_r

n = 2
for i in range(4):
    print(f"theta({n},{i}) =", C.theta(n, i))

# %%
# sigma is a rational function; the change of basis from H to R turns it into
# a combination of thetas.
print("sigma(1,1) =", C.sigma(1, 1))
basis = h_to_r(2)
for i, row in enumerate(basis.forward):
    print(f"H_{i} =", " + ".join(f"({c}) R_{j}" for j, c in enumerate(row)))

# %%
# tau and sigma are tied together by a Newton-type recursion.
i = 3
rhs = sum((C.sigma(n, i - j) * C.tau(n, j) * (1 if j % 2 else -1) for j in range(1, i + 1)), C.QRational(0))
print("sigma via tau recursion:", rhs == C.sigma(n, i))

# %%
# The coordinates t_{i,p} of p full twists in the R basis.
for p in (-1, 1, 2):
    print(f"p={p}:", [str(C.t_p(i, p)) for i in range(3)])

# %%
# Computing T_{n,p} two ways must agree.
print("T_sym(2,2) == T_omega(2,2):", C.T_sym(2, 2) == C.T_omega(2, 2))
