"""Seeded generators for test data in the generic locus."""
import random
from fractions import Fraction

from .gaudin import V1Element
from .poly import MultiPoly, zl_vars
from .symgroup import all_perms

__all__ = [
    "distinct_rationals",
    "small_rationals",
    "random_zl_poly",
    "random_v1_monomials",
    "random_invertible",
    "make_rng",
]


def distinct_rationals(rng, n, spread=9):
    """Distinct small integers shifted by distinct unit fractions."""
    base = rng.sample(range(-spread, spread + 1), n)
    shifts = rng.sample(range(2, 2 + 3 * n), n)
    return [Fraction(b) + Fraction(1, s) for b, s in zip(base, shifts)]


def small_rationals(rng, n, lo=-5, hi=5, max_den=4):
    return [Fraction(rng.randint(lo, hi), rng.randint(1, max_den)) for _ in range(n)]


def random_zl_poly(rng, n, max_degree=3, max_terms=4):
    """A random polynomial in z1..zN, l1..lN of total degree <= max_degree."""
    vs = zl_vars(n)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * (2 * n)
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(2 * n)] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    p = MultiPoly(vs, terms)
    return p if p else MultiPoly.const(vs, 1)


def random_v1_monomials(rng, n, count, max_exp=2):
    """Monomial samples ``c z^a l^b eps_tau`` for Z=B checks."""
    perms = all_perms(n)
    out = []
    for _ in range(count):
        a = [rng.randint(0, max_exp) for _ in range(n)]
        b = [rng.randint(0, max_exp) for _ in range(n)]
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        out.append(V1Element.monomial(n, a, b, rng.choice(perms), c))
    return out


def random_invertible(rng, n):
    """A random invertible rational matrix (unit lower times unit upper, then scaled)."""
    low = [[Fraction(1) if i == j else (Fraction(rng.randint(-3, 3)) if i > j else Fraction(0)) for j in range(n)] for i in range(n)]
    up = [[Fraction(rng.choice([1, 2, -1, 3])) if i == j else (Fraction(rng.randint(-3, 3), rng.randint(1, 2)) if i < j else Fraction(0)) for j in range(n)] for i in range(n)]
    return [[sum((low[i][k] * up[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def make_rng(seed):
    return random.Random(seed)
