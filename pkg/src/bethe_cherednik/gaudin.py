"""The space V_1 and the universal Bethe polynomial acting on it.

V_1 has basis ``eps_tau`` (tau in S_N) over C[z, l].  The universal Bethe
polynomial acts by the closed form

    P^B eps_tau = (-1)^N sum_sigma sgn(sigma)
                  prod_{sigma(i)=i} (1 - (u - z_{tau^-1(i)})(v - l_i)) eps_{sigma tau},

extended C[z, l]-linearly.  ``iota`` identifies V_1 with H_N as vector
spaces: ``z^a l^b eps_tau -> x^b tau y^a``.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

import numpy as np

from .cherednik import HElement, _check_bound, universal_central_poly
from .poly import MultiPoly, zl_vars
from .series import BiPoly
from .symgroup import Perm, act, all_perms, compose, identity, inverse, perm_sign

__all__ = [
    "V1Element",
    "bethe_poly_apply",
    "bethe_matrix",
    "extract_bethe_coeffs",
    "specialized_bethe_matrices",
    "iota",
    "iota_inv",
    "verify_ZB",
    "left_right_actions",
    "symmetrize",
    "projection_pr",
    "pr_iota_inv",
    "matrix_mul",
    "matrices_commute",
    "specialized_commute",
]


def _img(sigma):
    return sigma.img if isinstance(sigma, Perm) else tuple(sigma)


class V1Element:
    """``{tau: MultiPoly in z, l}`` meaning ``sum_tau f_tau eps_tau``."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        vs = zl_vars(n)
        clean = {}
        for tau, f in (coeffs or {}).items():
            tau = _img(tau)
            if len(tau) != n:
                raise ValueError(f"basis vector {tau} does not match N={n}")
            if not isinstance(f, MultiPoly):
                f = MultiPoly.const(vs, f)
            elif f.vars != vs:
                f = f.extend_vars(vs)
            if tau in clean:
                f = clean[tau] + f
            clean[tau] = f
        self.coeffs = {t: f for t, f in clean.items() if f}

    @classmethod
    def basis(cls, n, tau):
        return cls(n, {_img(tau): 1})

    @classmethod
    def monomial(cls, n, zexp, lexp, tau, c=1):
        vs = zl_vars(n)
        return cls(n, {_img(tau): MultiPoly.monomial(vs, tuple(zexp) + tuple(lexp), c)})

    def __add__(self, other):
        res = dict(self.coeffs)
        for t, f in other.coeffs.items():
            res[t] = res[t] + f if t in res else f
        return V1Element(self.n, res)

    def __neg__(self):
        return V1Element(self.n, {t: -f for t, f in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return V1Element(self.n, {t: f * c for t, f in self.coeffs.items()})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, V1Element):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    __hash__ = None

    def to_json(self):
        terms = []
        n = self.n
        for tau in sorted(self.coeffs):
            for e, c in self.coeffs[tau].sorted_terms():
                c = Fraction(c)
                terms.append(
                    {
                        "z": list(e[:n]),
                        "perm": [i + 1 for i in tau],
                        "l": list(e[n:]),
                        "n": str(c.numerator),
                        "d": str(c.denominator),
                    }
                )
        return {"N": n, "terms": terms}

    @classmethod
    def from_json(cls, data):
        n = data["N"]
        vs = zl_vars(n)
        res = cls(n)
        for t in data["terms"]:
            tau = tuple(i - 1 for i in t["perm"])
            c = Fraction(int(t["n"]), int(t["d"]))
            res = res + cls(n, {tau: MultiPoly.monomial(vs, tuple(t["z"]) + tuple(t["l"]), c)})
        return res

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({self.coeffs[t]!r})*eps{[i + 1 for i in t]}" for t in sorted(self.coeffs)
        )


# -- the closed-form action ------------------------------------------------

@lru_cache(maxsize=None)
def _action_on_basis(n, tau):
    """P^B eps_tau as ``{(deg_u, deg_v): {rho: MultiPoly in z, l}}``."""
    vs = zl_vars(n)
    full = vs + ("u", "v")
    u = MultiPoly.var(full, "u")
    v = MultiPoly.var(full, "v")
    tinv = inverse(tau)
    out = {}
    for sigma in all_perms(n):
        prod = MultiPoly.const(full, perm_sign(sigma) * (-1) ** n)
        for i in range(n):
            if sigma[i] == i:
                z = MultiPoly.var(full, f"z{tinv[i] + 1}")
                lam = MultiPoly.var(full, f"l{i + 1}")
                prod = prod * (1 - (u - z) * (v - lam))
        rho = compose(sigma, tau)
        for key, f in prod.split(("u", "v")).items():
            slot = out.setdefault(key, {})
            slot[rho] = slot[rho] + f if rho in slot else f
    return out


def bethe_poly_apply(vec):
    """P^B applied to ``vec``: a BiPoly keyed (deg_u, deg_v) of V1Elements."""
    n = vec.n
    acc = {}
    for tau, f in vec.coeffs.items():
        for key, parts in _action_on_basis(n, tau).items():
            piece = V1Element(n, {rho: g * f for rho, g in parts.items()})
            acc[key] = acc[key] + piece if key in acc else piece
    return BiPoly(acc)


def bethe_matrix(n):
    """``M[(du, dv)][r][c]``: eps_{perms[r]}-coefficient of P^B eps_{perms[c]}.

    Rows and columns follow :func:`all_perms` order.
    """
    _check_bound(n)
    perms = all_perms(n)
    index = {p: k for k, p in enumerate(perms)}
    zero = MultiPoly.zero(zl_vars(n))
    mats = {}
    for c, tau in enumerate(perms):
        for key, parts in _action_on_basis(n, tau).items():
            m = mats.setdefault(key, [[zero] * len(perms) for _ in perms])
            for rho, g in parts.items():
                m[index[rho]][c] = g
    return mats


def extract_bethe_coeffs(n):
    """Table ``b[i][j]`` of matrices: the coefficient of ``u^(N-i) v^(N-j)``."""
    mats = bethe_matrix(n)
    size = factorial(n)
    zero = MultiPoly.zero(zl_vars(n))
    empty = [[zero] * size for _ in range(size)]
    return [[mats.get((n - i, n - j), empty) for j in range(n + 1)] for i in range(n + 1)]


def matrix_mul(a, b):
    size = len(a)
    out = []
    for r in range(size):
        row = []
        for c in range(size):
            acc = None
            for k in range(size):
                x, y = a[r][k], b[k][c]
                if x and y:
                    t = x * y
                    acc = t if acc is None else acc + t
            row.append(acc if acc is not None else a[0][0] * 0)
        out.append(row)
    return out


def matrices_commute(a, b):
    ab, ba = matrix_mul(a, b), matrix_mul(b, a)
    return all(x == y for ra, rb in zip(ab, ba) for x, y in zip(ra, rb))


def _bivar_mul(p, q):
    out = {}
    for (a, b), c in p.items():
        for (d, e), f in q.items():
            k = (a + d, b + e)
            out[k] = out.get(k, 0) + c * f
    return {k: c for k, c in out.items() if c}


def specialized_bethe_matrices(z0, l0):
    """Numeric ``{(du, dv): Fraction matrix}`` at z = z0, l = l0.

    Built directly from the closed form without symbolic z, l.
    """
    n = len(z0)
    perms = all_perms(n)
    index = {p: k for k, p in enumerate(perms)}
    size = len(perms)
    mats = {}
    for c, tau in enumerate(perms):
        tinv = inverse(tau)
        for sigma in perms:
            prod = {(0, 0): Fraction(perm_sign(sigma) * (-1) ** n)}
            for i in range(n):
                if sigma[i] == i:
                    z, lam = Fraction(z0[tinv[i]]), Fraction(l0[i])
                    # 1 - (u - z)(v - lam)
                    factor = {(1, 1): -1, (1, 0): lam, (0, 1): z, (0, 0): 1 - z * lam}
                    prod = _bivar_mul(prod, factor)
            r = index[compose(sigma, tau)]
            for key, val in prod.items():
                m = mats.setdefault(key, [[Fraction(0)] * size for _ in range(size)])
                m[r][c] += val
    return mats


# -- iota --------------------------------------------------------------------

def iota(vec):
    """``z^a l^b eps_tau -> x^b tau y^a``."""
    n = vec.n
    terms = {}
    for tau, f in vec.coeffs.items():
        for e, c in f.terms.items():
            terms[(e[n:], tau, e[:n])] = c
    return HElement(n, terms)


def iota_inv(h):
    n = h.n
    vs = zl_vars(n)
    coeffs = {}
    for (a, tau, b), c in h.terms.items():
        coeffs.setdefault(tau, {})[tuple(b) + tuple(a)] = c
    return V1Element(n, {t: MultiPoly(vs, d) for t, d in coeffs.items()})


def verify_ZB(n, samples):
    """Check ``iota(P^B v) == P^Z iota(v)`` coefficientwise for each sample.

    Returns ``(ok, first_failure)`` where ``first_failure`` is ``None`` or a
    description of the first mismatch.
    """
    pz = universal_central_poly(n)
    for vec in samples:
        lhs = bethe_poly_apply(vec)
        h = iota(vec)
        keys = set(lhs.terms) | set(pz.terms)
        for key in sorted(keys):
            left = iota(lhs.terms[key]) if key in lhs.terms else HElement.zero(n)
            right = pz.terms[key] * h if key in pz.terms else HElement.zero(n)
            if left != right:
                return False, {"sample": vec.to_json(), "uv_degree": list(key)}
    return True, None


# -- left and right actions ------------------------------------------------

def left_right_actions(sigma, vec, side):
    """sigma^L permutes l and the letters of eps; sigma^R permutes z and the factors.

    ``sigma^L (f eps_tau) = (sigma^l f) eps_{sigma tau}`` and
    ``sigma^R (f eps_tau) = (sigma^z f) eps_{tau sigma^-1}``.
    """
    img = _img(sigma)
    if side == "L":
        return V1Element(
            vec.n, {compose(img, t): act(img, f, "l") for t, f in vec.coeffs.items()}
        )
    if side == "R":
        inv = inverse(img)
        return V1Element(
            vec.n, {compose(t, inv): act(img, f, "z") for t, f in vec.coeffs.items()}
        )
    raise ValueError(f"side must be 'L' or 'R', got {side!r}")


def symmetrize(vec, sides="LR"):
    """Average over S_N acting on the given sides (a projector onto invariants)."""
    n = vec.n
    res = vec
    for side in sides:
        total = V1Element(n)
        for p in all_perms(n):
            total = total + left_right_actions(p, res, side)
        res = total.scale(Fraction(1, factorial(n)))
    return res


def projection_pr(vec):
    """The eps_id coefficient."""
    return vec.coeffs.get(identity(vec.n), MultiPoly.zero(zl_vars(vec.n)))


def pr_iota_inv(h):
    """``N! * pr(iota^-1(h))``: sends ``q(x) p(y) e`` to ``q(l) p(z)``."""
    return projection_pr(iota_inv(h)).scale(factorial(h.n))


def _integer_matrix(m):
    """Clear denominators; commutation is unaffected by scalar factors."""
    den = 1
    for row in m:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    return np.array([[int(Fraction(x) * den) for x in row] for row in m], dtype=object)


def specialized_commute(z0, l0):
    """Pairwise commutation of all coefficient matrices at (z0, l0).

    Returns the first non-commuting pair of (deg_u, deg_v) keys, or None.
    """
    mats = specialized_bethe_matrices(z0, l0)
    keys = sorted(mats)
    ints = {k: _integer_matrix(mats[k]) for k in keys}
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            x, y = ints[keys[a]], ints[keys[b]]
            if not (x.dot(y) == y.dot(x)).all():
                return keys[a], keys[b]
    return None
