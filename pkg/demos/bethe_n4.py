"""
Gaudin Hamiltonians at N = 4
============================

At N = 4 the coefficient matrices are 24 x 24.  Specialize z and l to
rationals and check that every pair commutes.  Entries are cleared to
integers so numpy object arrays do the products exactly.
"""
from fractions import Fraction

from bethe_cherednik.gaudin import specialized_bethe_matrices, specialized_commute

z0 = [Fraction(1, 2), Fraction(2), Fraction(-3), Fraction(7, 3)]
l0 = [Fraction(1), Fraction(0), Fraction(-2, 5), Fraction(4)]

mats = specialized_bethe_matrices(z0, l0)
print(len(mats), "coefficient matrices of size", len(next(iter(mats.values()))))
print("first non-commuting pair:", specialized_commute(z0, l0))
