"""Calogero-Moser points, P^C and the Psi^C series."""
from fractions import Fraction

from .linalg import (
    _check_square,
    commutator,
    det_exact,
    identity_matrix,
    inverse,
    matadd,
    matmul,
    rank,
    rat_matrix,
    trace,
)
from .poly import MultiPoly, parse_rational, rational_str
from .series import BiPoly, TruncSeries, expand_rational
from .upoly import UPoly

__all__ = [
    "CMPoint",
    "is_cm_point",
    "cm_universal_poly",
    "cm_coeffs",
    "cm_psi",
    "cm_psi_quotient",
    "generic_cm_point",
    "char_poly",
    "conjugate",
    "trace_from_psi",
]


def is_cm_point(z, lam):
    """rank([Z, L] + 1) == 1, by exact elimination."""
    n = _check_square(z)
    if _check_square(lam) != n:
        raise ValueError("Z and L must have the same dimension")
    return rank(matadd(commutator(z, lam), identity_matrix(n))) == 1


class CMPoint:
    """A representative (Z, L) of a point of the Calogero-Moser space."""

    __slots__ = ("z", "lam")

    def __init__(self, z, lam, check=True):
        self.z = rat_matrix(z)
        self.lam = rat_matrix(lam)
        if check and not is_cm_point(self.z, self.lam):
            raise ValueError("rank([Z, L] + 1) != 1: not a Calogero-Moser point")

    @property
    def n(self):
        return len(self.z)

    def to_json(self):
        return {
            "N": self.n,
            "Z": [[rational_str(x) for x in row] for row in self.z],
            "L": [[rational_str(x) for x in row] for row in self.lam],
        }

    @classmethod
    def from_json(cls, data):
        z = [[parse_rational(x) for x in row] for row in data["Z"]]
        lam = [[parse_rational(x) for x in row] for row in data["L"]]
        if len(z) != data["N"]:
            raise ValueError("declared N does not match the matrices")
        return cls(z, lam)

    def __repr__(self):
        return f"CMPoint(Z={self.z}, L={self.lam})"


def _uv_matrix(m, name):
    """``name * 1 - m`` as a matrix of MultiPoly in (u, v)."""
    n = len(m)
    var = MultiPoly.var(("u", "v"), name)
    return [[(var if i == j else 0) - m[i][j] for j in range(n)] for i in range(n)]


def cm_universal_poly(p):
    """P^C = det((v - L)(u - Z) - 1) as a BiPoly keyed (deg_u, deg_v)."""
    a = _uv_matrix(p.lam, "v")
    b = _uv_matrix(p.z, "u")
    n = p.n
    prod = [
        [sum((a[i][k] * b[k][j] for k in range(n)), MultiPoly.zero(("u", "v"))) - (1 if i == j else 0)
         for j in range(n)]
        for i in range(n)
    ]
    d = det_exact(prod)
    return BiPoly({k: c.constant_term() for k, c in d.split(("u", "v")).items()})


def cm_coeffs(p):
    """Table ``m[i][j]``: the coefficient of ``u^(N-i) v^(N-j)``."""
    pc = cm_universal_poly(p)
    n = p.n
    return [[pc.coeff(n - i, n - j) for j in range(n + 1)] for i in range(n + 1)]


def char_poly(m):
    """det(u - m) as a monic :class:`UPoly`."""
    n = len(m)
    u = UPoly([0, 1])
    mat = [[(u if i == j else UPoly()) - UPoly([m[i][j]]) for j in range(n)] for i in range(n)]
    return det_exact(mat)


def _neumann(m, order):
    """Matrices M^k for k < order: (x - M)^-1 = sum_k M^k x^{-k-1}."""
    n = len(m)
    powers = [identity_matrix(n)]
    for _ in range(1, order):
        powers.append(matmul(powers[-1], m))
    return powers


def cm_psi(p, order):
    """Psi^C = det(1 - (v - L)^-1 (u - Z)^-1) to order ``order``.

    Uses det = exp(tr log): with A = sum L^j Z^i u^-i-1 v^-j-1,
    log Psi = -sum_r tr(A^r) / r.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    zp = _neumann(p.z, order)
    lp = _neumann(p.lam, order)
    # a[(i, j)] is the matrix coefficient of u^-i v^-j in A
    a = {}
    for i in range(1, order + 1):
        for j in range(1, order + 1):
            a[i, j] = matmul(lp[j - 1], zp[i - 1])
    power = dict(a)
    log_terms = {}
    r = 1
    while power:
        for key, m in power.items():
            t = trace(m) * Fraction(-1, r)
            if t:
                log_terms[key] = log_terms.get(key, 0) + t
        nxt = {}
        for (i1, j1), m1 in power.items():
            for (i2, j2), m2 in a.items():
                if i1 + i2 <= order and j1 + j2 <= order:
                    k = (i1 + i2, j1 + j2)
                    prod = matmul(m1, m2)
                    nxt[k] = matadd(nxt[k], prod) if k in nxt else prod
        power = nxt
        r += 1
    return TruncSeries(order, log_terms).exp()


def cm_psi_quotient(p, order):
    """Independent route: expand P^C / (det(u - Z) det(v - L))."""
    return expand_rational(cm_universal_poly(p), char_poly(p.z), char_poly(p.lam), order)


def generic_cm_point(l0, d):
    """L = diag(l0), Z_ii = d_i, Z_ij = 1/(l0_j - l0_i).

    With this sign [Z, L] + 1 is the all-ones matrix, which has rank one.
    """
    l0 = [Fraction(x) for x in l0]
    d = [Fraction(x) for x in d]
    n = len(l0)
    if len(d) != n:
        raise ValueError("l0 and d must have equal length")
    if len(set(l0)) != n:
        raise ValueError("l0 entries must be pairwise distinct")
    z = [[d[i] if i == j else 1 / (l0[j] - l0[i]) for j in range(n)] for i in range(n)]
    lam = [[l0[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return CMPoint(z, lam)


def conjugate(p, g):
    """(g Z g^-1, g L g^-1)."""
    gi = inverse(g)
    return CMPoint(matmul(matmul(g, p.z), gi), matmul(matmul(g, p.lam), gi))


def trace_from_psi(psi, n):
    """tr(L Z) read off the u^-2 v^-2 coefficient of log Psi^C.

    log Psi = -sum_r tr(A^r)/r gives [log Psi]_{2,2} = -tr(L Z) - N/2.
    """
    return -psi.truncate(2).log()[2, 2] - Fraction(n, 2)
