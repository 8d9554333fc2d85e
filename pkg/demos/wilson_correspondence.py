"""
Calogero-Moser points and quasi-exponential spaces
==================================================

A generic point (Z, L) with L diagonal is matched with the span of
(u - h_i) e^{l_i u}.  The two Psi-series agree term by term.
"""
from fractions import Fraction

from bethe_cherednik.calogero import char_poly, cm_psi, generic_cm_point
from bethe_cherednik.quasiexp import classify, qexp_psi, singular_shifts, wilson_shifts, wilson_space, wronskian

l0 = [Fraction(0), Fraction(1), Fraction(3)]
d = [Fraction(1, 2), Fraction(-1), Fraction(2)]

point = generic_cm_point(l0, d)
print("Z =", point.z)

space = wilson_space(l0, d)
print(space)
print(classify(space)["is_generic"])

# h_i from the closed form and from the point's own P^C
print(wilson_shifts(l0, d))
print(singular_shifts(point, l0))

order = 6
a, b = cm_psi(point, order), qexp_psi(space, order)
print(a == b)
for row in a.table()[:4]:
    print([str(x) for x in row[:4]])

# the Wronskian is the characteristic polynomial of Z
print(wronskian(space), "|", char_poly(point.z))
