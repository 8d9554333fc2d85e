"""Multi-symmetric polynomials: P^P, its coefficients p_ij and power sums.

The generation statement is checked through the logarithm of
``det(1 - (u - Z)^-1 (v - L)^-1)`` for diagonal Z = diag(z), L = diag(l):

    log det(...) = - sum_{i,j} u^{-i-1} v^{-j-1}
                     sum_{r>=1} C(i, r-1) C(j, r-1) / r * tr(L^{j+1-r} Z^{i+1-r})

which is triangular in the power sums tr(L^k Z^l).
"""
from fractions import Fraction
from functools import lru_cache
from math import comb

from .poly import MultiPoly, zl_vars
from .series import BiPoly, TruncSeries, series_invert

__all__ = [
    "universal_multisym",
    "multisym_coeffs",
    "power_sum",
    "logdet_coefficients",
    "logdet_expansion",
    "p_vars",
    "power_sums_in_p",
    "substitute_p",
]


@lru_cache(maxsize=None)
def universal_multisym(n):
    """P^P = prod_i ((u - z_i)(v - l_i) - 1) as a BiPoly keyed (deg_u, deg_v)."""
    if n < 1:
        raise ValueError("N must be at least 1")
    vs = zl_vars(n) + ("u", "v")
    u = MultiPoly.var(vs, "u")
    v = MultiPoly.var(vs, "v")
    prod = MultiPoly.const(vs, 1)
    for i in range(1, n + 1):
        z = MultiPoly.var(vs, f"z{i}")
        lam = MultiPoly.var(vs, f"l{i}")
        prod = prod * ((u - z) * (v - lam) - 1)
    return BiPoly.from_multipoly(prod)


def multisym_coeffs(n):
    """Table ``p[i][j]``: coefficient of ``u^(N-i) v^(N-j)``; ``p[0][0] == 1``."""
    pp = universal_multisym(n)
    zero = MultiPoly.zero(zl_vars(n))
    return [[pp.coeff(n - i, n - j) or zero for j in range(n + 1)] for i in range(n + 1)]


def power_sum(k, l, n):
    """sum_i l_i^k z_i^l."""
    vs = zl_vars(n)
    terms = {}
    for i in range(n):
        e = [0] * (2 * n)
        e[i] += l
        e[n + i] += k
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return MultiPoly(vs, terms)


def logdet_coefficients(i, j):
    """``{(k, l): c}`` with [log det]_{u^-i-1 v^-j-1} = -sum c tr(L^k Z^l)."""
    out = {}
    for r in range(1, min(i, j) + 2):
        out[j + 1 - r, i + 1 - r] = Fraction(comb(i, r - 1) * comb(j, r - 1), r)
    return out


def logdet_expansion(n, order):
    """Truncated log det(1 - (u - Z)^-1 (v - L)^-1) with polynomial coefficients.

    Entry ``[a, b]`` is the coefficient of ``u^-a v^-b``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    coeffs = {}
    for a in range(1, order + 1):
        for b in range(1, order + 1):
            total = MultiPoly.zero(zl_vars(n))
            for (k, l), c in logdet_coefficients(a - 1, b - 1).items():
                total = total - power_sum(k, l, n).scale(c)
            coeffs[a, b] = total
    return TruncSeries(order, coeffs)


def p_vars(n):
    """Names of the formal coefficient variables p_ij, (i, j) != (0, 0)."""
    return tuple(
        f"p{i}_{j}" for i in range(n + 1) for j in range(n + 1) if (i, j) != (0, 0)
    )


def power_sums_in_p(n, max_degree=3):
    """Express tr(L^k Z^l), k + l <= max_degree, as polynomials in the p_ij.

    The series P^P / (det(u - Z) det(v - L)) is built over formal p_ij,
    its logarithm is taken, and the triangular system is solved from low
    to high degree.  Returns ``{(k, l): MultiPoly over p_vars(n)}``.
    """
    pv = p_vars(n)

    def p(i, j):
        if (i, j) == (0, 0):
            return MultiPoly.const(pv, 1)
        return MultiPoly.var(pv, f"p{i}_{j}")

    order = max_degree + 1
    num = TruncSeries(order, {(i, j): p(i, j) for i in range(n + 1) for j in range(n + 1)})
    du = TruncSeries(order, {(i, 0): p(i, 0) for i in range(n + 1)})
    dv = TruncSeries(order, {(0, j): p(0, j) for j in range(n + 1)})
    log_psi = (num * series_invert(du) * series_invert(dv)).log()

    found = {}
    for total in range(max_degree + 1):
        for k in range(total + 1):
            l = total - k
            coeffs = logdet_coefficients(l, k)
            acc = -log_psi[l + 1, k + 1]
            if not isinstance(acc, MultiPoly):
                acc = MultiPoly.const(pv, acc)
            for key, c in coeffs.items():
                if key != (k, l):
                    acc = acc - found[key].scale(c)
            found[k, l] = acc.scale(Fraction(1) / coeffs[k, l])
    return found


def substitute_p(expr, n):
    """Replace each formal p_ij by the actual coefficient of P^P."""
    table = multisym_coeffs(n)
    values = []
    for name in expr.vars:
        i, j = (int(t) for t in name[1:].split("_"))
        values.append(table[i][j])
    res = expr.evaluate(values)
    if not isinstance(res, MultiPoly):
        res = MultiPoly.const(zl_vars(n), res)
    return res
