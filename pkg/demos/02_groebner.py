"""
Groebner bases, saturation and elimination
==========================================

"""

from nilcert import Ideal, PolyRing, eliminate, format_polynomial, saturate
from nilcert.groebner import nilpotency_order

R = PolyRing("x v")
x, v = R.gens()

# a principal ideal with an embedded component along x = 0
I = Ideal(R, [x**2 * (x + v**3)])
print("basis:", [format_polynomial(g) for g in I.groebner_basis])

# inverting x + v^3 strips the factor; k0 is the first stable exponent
sat = saturate(I, x + v**3)
print("I : (x+v^3)^oo =", [format_polynomial(g) for g in sat.ideal.generators], " k0 =", sat.k0)

# so x is nilpotent of order 2 there
print("order of x:", nilpotency_order(x, I, x + v**3, bound=5))

# elimination keeps only the named variables
S = PolyRing("t x y z")
J = Ideal(S, ["x - t^3", "y - t^8", "z - t^7"])
print("toric ideal:", [format_polynomial(g) for g in eliminate(J, ["x", "y", "z"]).generators])
