"""
Polynomials, orders and parsing
===============================

"""

from nilcert import PolyRing, PrimeField, format_polynomial

# a ring is a list of variable names, a coefficient field and a monomial order
R = PolyRing("x y z")
x, y, z = R.gens()
f = (x + y) ** 3 - 3 * x * y * z
print(format_polynomial(f))

# the same text read back gives the same polynomial
assert R("x^3 + 3*x^2*y + 3*x*y^2 - 3*x*y*z + y^3") == f

# the order decides which term leads
g = R("y^3 + x*z")
L = R.with_order("lex")
print("grevlex lead:", g.lm, "  lex lead:", g.change_ring(L).lm)

# over GF(32003) coefficients print as symmetric residues
F = PolyRing("x y", PrimeField(32003))
print(format_polynomial(F("x - y + 1/2")))

# weighted degrees for the grading x, y, z -> 3, 8, 7
print("weighted degree of z^2 - x^2*y:", R("z^2 - x^2*y").weighted_degree((3, 8, 7)))
