"""Exact determinants and small dense matrices.

Matrices are lists of rows.  Entries may be any exact ring element
supporting ``+``, ``-`` and ``*``; :func:`det_exact` additionally needs
exact division for sizes above :data:`COFACTOR_MAX`.
"""
from fractions import Fraction

from .symgroup import all_perms, perm_sign

__all__ = [
    "COFACTOR_MAX",
    "det_exact",
    "rdet",
    "rat_matrix",
    "identity_matrix",
    "matmul",
    "matadd",
    "matsub",
    "matscale",
    "commutator",
    "trace",
    "rank",
    "inverse",
    "solve_exact",
]

COFACTOR_MAX = 4


def _check_square(m):
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise ValueError("matrix must be square and nonempty")
    return n


def _cofactor(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        a = m[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        t = a * _cofactor(minor)
        if j % 2:
            t = -t
        total = t if total is None else total + t
    return total if total is not None else m[0][0] * 0


def _divide(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division in Bareiss step")
        return q
    if hasattr(a, "exact_div"):
        return a.exact_div(b)
    return a / b


def _bareiss(m):
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det_exact(m):
    """Determinant over a commutative ring.

    Cofactor expansion up to 4x4, fraction-free Bareiss elimination above.
    """
    n = _check_square(m)
    if n <= COFACTOR_MAX:
        return _cofactor(m)
    return _bareiss(m)


def rdet(m):
    """Row determinant: sum over sigma of sgn(sigma) a_{1 s(1)} ... a_{N s(N)}.

    Factors are multiplied strictly left to right in row order, so the
    entries may come from a noncommutative ring.
    """
    n = _check_square(m)
    total = None
    for img in all_perms(n):
        prod = m[0][img[0]]
        for r in range(1, n):
            prod = prod * m[r][img[r]]
        if perm_sign(img) < 0:
            prod = -prod
        total = prod if total is None else total + prod
    return total


# -- rational matrices --------------------------------------------------

def rat_matrix(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    _check_square(m)
    return m


def identity_matrix(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = a[i]
        out.append([sum((row[t] * b[t][j] for t in range(k) if row[t]), Fraction(0)) for j in range(m)])
    return out


def matadd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(a, c):
    return [[x * c for x in row] for row in a]


def commutator(a, b):
    return matsub(matmul(a, b), matmul(b, a))


def trace(a):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def rank(m):
    """Rank by exact Gaussian elimination over Q."""
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def inverse(m):
    n = _check_square(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def solve_exact(m, rhs):
    """Solve ``m x = rhs`` over Q; returns ``(x, unique)`` or raises if inconsistent.

    Free variables are set to zero in the returned particular solution.
    """
    rows, cols = len(m), len(m[0]) if m else 0
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(m, rhs)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(a[i][cols] for i in range(r, rows)):
        raise ArithmeticError("linear system is inconsistent")
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return x, len(pivots) == cols
