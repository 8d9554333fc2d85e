"""
The centre of H_2 from one determinant
======================================

Build the universal central polynomial for N = 2, check each coefficient
against the generators, and compare with the Bethe side through iota.
"""

from bethe_cherednik.cherednik import HElement, central_coeffs, is_central, universal_central_poly
from bethe_cherednik.gaudin import V1Element, bethe_matrix, bethe_poly_apply, iota
from bethe_cherednik.symgroup import all_perms

pz = universal_central_poly(2)
for (du, dv), c in sorted(pz.terms.items(), reverse=True):
    print(f"u^{du} v^{dv}:  {c}")

# every coefficient commutes with x_i, y_i and s_12
print(all(is_central(c) for row in central_coeffs(2) for c in row))

# the element x1 y1 + x2 y2 needs +s12, not -s12, to be central
x1, x2, y1, y2 = HElement.x(2, 1), HElement.x(2, 2), HElement.y(2, 1), HElement.y(2, 2)
s = HElement.s(2, 1, 2)
print(is_central(x1 * y1 + x2 * y2 + s), is_central(x1 * y1 + x2 * y2 - s))

# The Bethe polynomial acts on eps_id, eps_s12 by 2x2 matrices.
for key, m in sorted(bethe_matrix(2).items(), reverse=True):
    print(key, m)

# iota carries one action to the other, coefficient by coefficient
for tau in all_perms(2):
    vec = V1Element.basis(2, tau)
    bethe = bethe_poly_apply(vec)
    print(tau, all(iota(bethe.terms[k]) == c * iota(vec) for k, c in pz.terms.items()))
