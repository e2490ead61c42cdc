"""
Exact Laurent polynomials in a and q
====================================

Everything in the package is built on sparse integer Laurent polynomials in
two variables.  Coefficients are Python ints, so nothing ever rounds.
"""

from coloredhomfly.laurent import LaurentPoly2, QFactor, QRational, divide_exact

a, q = LaurentPoly2.gens()

# %%
# Arithmetic works as expected, and printing is canonical: terms are sorted by
# descending a-degree, then descending q-degree.
x = a * q - a**-1 * q**-1  # {1;a}
y = a * q**-1 - a**-1 * q  # {-1;a}
print("{1;a}{-1;a} =", x * y)

# %%
# The text format parses back to the same object.
p = LaurentPoly2.parse("a^2 + a^-2 + 1 - q^2 - q^-2")
print("parsed  :", p)
print("mirror  :", p.mirror())  # a -> 1/a, q -> 1/q
print("a = q^2 :", p.substitute_a(2))

# %%
# Division by a single brace factor is exact or it fails loudly.
two = q**2 - q**-2
print("{2}/{1} =", divide_exact(two, QFactor.brace(1)))
try:
    divide_exact(a - a**-1, QFactor.brace(1))
except ArithmeticError as exc:
    print("not divisible:", exc)

# %%
# Rational quantities keep their denominators as products of braces, so
# cancellation is mostly symbolic.  reduce() insists on a polynomial.
r = QRational(two, [QFactor.brace(1)])
print("r       =", r)
print("r.reduce() =", r.reduce())
print("r == q + 1/q:", r == q + q**-1)

# %%
# JSON terms use strings for coefficients so big integers survive any reader.
print(p.to_json_terms()[:2])
