"""The rational Cherednik algebra H_N of type A in PBW normal form.

Every element is stored as a sum of terms ``x^a sigma y^b`` (x's left,
permutation in the middle, y's right).  Multiplication straightens
``y^b x^a`` with the divided-difference commutator

    y_j f(x) = f(x) y_j + sum_{k != j} (f - s_jk f) / (x_j - x_k) s_jk,

which encodes ``[x_i, y_j] = s_ij`` and ``[x_i, y_i] = -sum_a s_ia``.
"""
import os
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .poly import MultiPoly, normalize_coeff
from .series import BiPoly
from .symgroup import (
    Perm,
    all_perms,
    compose,
    identity,
    inverse,
    perm_sign,
    permute_exponents,
    transposition,
)

__all__ = [
    "HElement",
    "h_mul",
    "max_n",
    "xy_vars",
    "normal_order",
    "symmetrizer",
    "universal_central_poly",
    "central_coeffs",
    "is_central",
    "FreeWord",
    "spherical_poly",
    "alpha",
    "alpha_mul",
    "alpha_commutes",
    "NBoundError",
]

DEFAULT_MAX_N = 4


class NBoundError(ValueError):
    """N exceeds the configured bound for symbolic H_N work."""


def max_n():
    """Symbolic N bound; ``WORKBENCH_MAX_N`` overrides the default of 4."""
    return int(os.environ.get("WORKBENCH_MAX_N", DEFAULT_MAX_N))


def _check_bound(n):
    if n < 1:
        raise ValueError("N must be at least 1")
    if n > max_n():
        raise NBoundError(f"N={n} exceeds the symbolic bound {max_n()}")


def xy_vars(n):
    return tuple(f"x{i}" for i in range(1, n + 1)) + tuple(
        f"y{i}" for i in range(1, n + 1)
    )


def _add_into(acc, key, c):
    s = acc.get(key, 0) + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class HElement:
    """Element of H_N: ``{(xexp, perm, yexp): coefficient}``.

    ``perm`` is a 0-based image tuple; see :mod:`bethe_cherednik.symgroup`.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None, _trusted=False):
        self.n = n
        if _trusted:
            self.terms = terms
            return
        clean = {}
        for (a, p, b), c in (terms or {}).items():
            key = (tuple(a), tuple(p), tuple(b))
            if len(key[0]) != n or len(key[1]) != n or len(key[2]) != n:
                raise ValueError(f"term {key} does not match N={n}")
            _add_into(clean, key, normalize_coeff(c))
        self.terms = {k: normalize_coeff(c) for k, c in clean.items()}

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n):
        return cls(n, {}, _trusted=True)

    @classmethod
    def one(cls, n):
        z = (0,) * n
        return cls(n, {(z, identity(n), z): 1}, _trusted=True)

    @classmethod
    def scalar(cls, n, c):
        c = normalize_coeff(c)
        if not c:
            return cls.zero(n)
        z = (0,) * n
        return cls(n, {(z, identity(n), z): c}, _trusted=True)

    @classmethod
    def x(cls, n, i, power=1):
        """``x_i`` for 1-based ``i``."""
        a = [0] * n
        a[i - 1] = power
        z = (0,) * n
        return cls(n, {(tuple(a), identity(n), z): 1}, _trusted=True)

    @classmethod
    def y(cls, n, i, power=1):
        b = [0] * n
        b[i - 1] = power
        z = (0,) * n
        return cls(n, {(z, identity(n), tuple(b)): 1}, _trusted=True)

    @classmethod
    def perm(cls, n, sigma):
        img = sigma.img if isinstance(sigma, Perm) else tuple(sigma)
        z = (0,) * n
        return cls(n, {(z, img, z): 1}, _trusted=True)

    @classmethod
    def s(cls, n, i, j):
        """Transposition ``s_ij`` (1-based)."""
        return cls.perm(n, transposition(n, i - 1, j - 1))

    @classmethod
    def term(cls, n, xexp, sigma, yexp, c=1):
        img = sigma.img if isinstance(sigma, Perm) else tuple(sigma)
        return cls(n, {(tuple(xexp), img, tuple(yexp)): c})

    def generators(self):
        return generators(self.n)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, HElement):
            if other.n != self.n:
                raise ValueError(f"N mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return HElement.scalar(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        res = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(res, k, c)
        return HElement(self.n, {k: normalize_coeff(c) for k, c in res.items()}, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return HElement(self.n, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = normalize_coeff(c)
        if not c:
            return HElement.zero(self.n)
        return HElement(
            self.n, {k: normalize_coeff(v * c) for k, v in self.terms.items()}, _trusted=True
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return h_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        r = HElement.one(self.n)
        for _ in range(k):
            r = r * self
        return r

    def commutator(self, other):
        return self * other - other * self

    # -- queries ----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HElement.scalar(self.n, other)
        if not isinstance(other, HElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def top_degree_part(self):
        """Terms of maximal filtered degree (deg x = deg y = 1, deg s = 0)."""
        if not self.terms:
            return self
        d = max(sum(a) + sum(b) for a, _, b in self.terms)
        return HElement(
            self.n,
            {k: c for k, c in self.terms.items() if sum(k[0]) + sum(k[2]) == d},
            _trusted=True,
        )

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda t: (sum(t[0][0]) + sum(t[0][2]), t[0][0], t[0][1], t[0][2]),
            reverse=True,
        )

    def to_json(self):
        return {
            "N": self.n,
            "terms": [
                {
                    "x": list(a),
                    "perm": [i + 1 for i in p],
                    "y": list(b),
                    "n": str(Fraction(c).numerator),
                    "d": str(Fraction(c).denominator),
                }
                for (a, p, b), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        n = data["N"]
        return cls(
            n,
            {
                (tuple(t["x"]), tuple(i - 1 for i in t["perm"]), tuple(t["y"])): Fraction(
                    int(t["n"]), int(t["d"])
                )
                for t in data["terms"]
            },
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        n = self.n
        ident = identity(n)
        parts = []
        for (a, p, b), c in self.sorted_terms():
            factors = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(a) if e]
            if p != ident:
                factors.append(_perm_name(p))
            factors += [f"y{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(b) if e]
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _perm_name(p):
    moved = [i for i in range(len(p)) if p[i] != i]
    if len(moved) == 2:
        return f"s{moved[0] + 1}{moved[1] + 1}"
    return "[" + ",".join(str(i + 1) for i in p) + "]"


def generators(n):
    """x_i, y_i and the adjacent transpositions: a generating set of H_N."""
    gens = [HElement.x(n, i) for i in range(1, n + 1)]
    gens += [HElement.y(n, i) for i in range(1, n + 1)]
    gens += [HElement.s(n, i, i + 1) for i in range(1, n)]
    return gens


# -- straightening kernel -------------------------------------------------

def _divided_difference(a, j, k):
    """Terms of (x^a - s_jk x^a) / (x_j - x_k) as ``[(exp, coeff)]``."""
    m, n = a[j], a[k]
    if m == n:
        return []
    sign = 1
    if m < n:
        m, n, sign = n, m, -1
    out = []
    base = list(a)
    for t in range(m - n):
        e = list(base)
        e[j] = n + t
        e[k] = m - 1 - t
        out.append((tuple(e), sign))
    return out


def _left_y(n, j, terms):
    """Left-multiply a normal-form term dict by ``y_j`` (0-based ``j``)."""
    out = {}
    for (a, p, b), c in terms.items():
        pj = p.index(j)  # p^{-1}(j): y_j p = p y_{p^{-1}(j)}
        nb = list(b)
        nb[pj] += 1
        _add_into(out, (a, p, tuple(nb)), c)
        for k in range(n):
            if k == j:
                continue
            dd = _divided_difference(a, j, k)
            if not dd:
                continue
            sp = compose(transposition(n, j, k), p)
            for e, s in dd:
                _add_into(out, (e, sp, b), s * c)
    return out


@lru_cache(maxsize=None)
def _straighten(n, b, a):
    """Normal form of ``y^b x^a`` as a tuple of ``((x, perm, y), coeff)``."""
    terms = {(a, identity(n), (0,) * n): 1}
    for j in range(n):
        for _ in range(b[j]):
            terms = _left_y(n, j, terms)
    return tuple(terms.items())


def h_mul(left, right):
    """Product in H_N, returned in normal form."""
    if left.n != right.n:
        raise ValueError(f"N mismatch: {left.n} vs {right.n}")
    n = left.n
    zero = (0,) * n
    ident = identity(n)
    out = {}
    get = out.get
    for (a1, s1, b1), c1 in left.terms.items():
        for (a2, s2, b2), c2 in right.terms.items():
            c12 = c1 * c2
            if b1 == zero:
                pieces = (((a2, ident, zero), 1),)
            elif a2 == zero:
                pieces = (((a2, ident, b1), 1),)
            else:
                pieces = _straighten(n, b1, a2)
            s2inv = inverse(s2)
            for (p, rho, q), c in pieces:
                xa = tuple(x + y for x, y in zip(a1, permute_exponents(s1, p)))
                perm = compose(compose(s1, rho), s2)
                yb = tuple(x + y for x, y in zip(permute_exponents(s2inv, q), b2))
                key = (xa, perm, yb)
                v = get(key, 0) + c12 * c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return HElement(n, {k: normalize_coeff(v) for k, v in out.items()}, _trusted=True)


# -- normal ordering and the universal polynomials --------------------------

def normal_order(p, n, sigma=None):
    """The map ``:q(x)p(y): -> q(x) sigma p(y)`` for a commutative polynomial.

    ``p`` is a :class:`MultiPoly` over :func:`xy_vars` (optionally extended
    by ``u``, ``v``); returns an :class:`HElement`, or a :class:`BiPoly` of
    them when ``u``/``v`` are present.
    """
    img = identity(n) if sigma is None else (sigma.img if isinstance(sigma, Perm) else tuple(sigma))
    xy = xy_vars(n)
    extra = tuple(v for v in p.vars if v not in xy)
    if extra:
        coeffs = p.split(extra)
        out = {}
        for k, sub in coeffs.items():
            out[k] = normal_order(sub.extend_vars(xy), n, img)
        if extra == ("u", "v"):
            return BiPoly(out)
        return out
    if p.vars != xy:
        p = p.extend_vars(xy)
    terms = {(e[:n], img, e[n:]): c for e, c in p.terms.items()}
    return HElement(n, terms)


def symmetrizer(n):
    """e = (1/N!) sum_sigma sigma."""
    z = (0,) * n
    c = Fraction(1, factorial(n))
    return HElement(n, {(z, p, z): c for p in all_perms(n)}, _trusted=True)


def _fixed_factor(n, i):
    """``1 - (v - x_i)(u - y_i)`` over (x, y, u, v); ``i`` is 0-based."""
    vs = xy_vars(n) + ("u", "v")
    x = MultiPoly.var(vs, f"x{i + 1}")
    y = MultiPoly.var(vs, f"y{i + 1}")
    u = MultiPoly.var(vs, "u")
    v = MultiPoly.var(vs, "v")
    return 1 - (v - x) * (u - y)


@lru_cache(maxsize=None)
def _central_poly_cached(n):
    vs = xy_vars(n) + ("u", "v")
    total = BiPoly()
    for img in all_perms(n):
        prod = MultiPoly.const(vs, 1)
        for i in range(n):
            if img[i] == i:
                prod = prod * _fixed_factor(n, i)
        sign = perm_sign(img) * (-1) ** n
        ordered = normal_order(prod, n)
        sig = HElement.perm(n, img)
        total = total + ordered.map(lambda h: (h * sig).scale(sign))
    return total


def universal_central_poly(n):
    """P^Z as a :class:`BiPoly` keyed by ``(deg_u, deg_v)``.

    P^Z = (-1)^N sum_sigma :prod_{sigma(i)=i} (1 - (v - x_i)(u - y_i)): sgn(sigma) sigma.
    """
    _check_bound(n)
    return _central_poly_cached(n)


def central_coeffs(n):
    """Table ``c[i][j]``: coefficient of ``v^(N-i) u^(N-j)`` in P^Z."""
    pz = universal_central_poly(n)
    return [
        [pz.coeff(n - j, n - i) or HElement.zero(n) for j in range(n + 1)]
        for i in range(n + 1)
    ]


def is_central(a):
    """Whether ``a`` commutes with every x_i, y_i and s_{i,i+1}."""
    return all(not (g * a - a * g) for g in generators(a.n))


# -- free word ring for the spherical polynomial -------------------------

class FreeWord:
    """Noncommutative polynomials in letters ``("x", i)``, ``("y", i)``.

    Coefficients are :class:`MultiPoly` in ``u``, ``v`` (or scalars).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def letter(cls, kind, i):
        return cls({((kind, i),): 1})

    @classmethod
    def scalar(cls, c):
        return cls({(): c})

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            other = FreeWord.scalar(other)
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, FreeWord):
            other = FreeWord.scalar(other)
        res = dict(self.terms)
        for w, c in other.terms.items():
            res[w] = res[w] + c if w in res else c
        return FreeWord(res)

    __radd__ = __add__

    def __neg__(self):
        return FreeWord({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FreeWord):
            other = FreeWord.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FreeWord):
            return FreeWord({w: c * other for w, c in self.terms.items()})
        res = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                res[w] = res[w] + c if w in res else c
        return FreeWord(res)

    def __rmul__(self, other):
        return FreeWord({w: other * c for w, c in self.terms.items()})

    def normal_order(self, n):
        """Apply ``: :`` word by word; returns a BiPoly of HElements."""
        out = BiPoly()
        for w, c in self.terms.items():
            a, b = [0] * n, [0] * n
            for kind, i in w:
                (a if kind == "x" else b)[i] += 1
            h = HElement(n, {(tuple(a), identity(n), tuple(b)): 1}, _trusted=True)
            if isinstance(c, MultiPoly):
                for k, sub in c.split(("u", "v")).items():
                    out = out + BiPoly({k: h.scale(sub.constant_term())})
            else:
                out = out + BiPoly({(0, 0): h.scale(c)})
        return out


def spherical_poly(n):
    """P^U = :rdet((v - X)(u - Y) - K): e, K the all-ones matrix."""
    from .linalg import rdet

    _check_bound(n)
    uv = ("u", "v")
    u = MultiPoly.var(uv, "u")
    v = MultiPoly.var(uv, "v")
    one = MultiPoly.const(uv, 1)
    mat = []
    for r in range(n):
        row = []
        for c in range(n):
            if r == c:
                xr, yr = FreeWord.letter("x", r), FreeWord.letter("y", r)
                entry = (FreeWord.scalar(v) - xr) * (FreeWord.scalar(u) - yr) - FreeWord.scalar(one)
            else:
                entry = FreeWord.scalar(-one)
            row.append(entry)
        mat.append(row)
    e = symmetrizer(n)
    return rdet(mat).normal_order(n).map(lambda h: h * e)


# -- the alpha construction ------------------------------------------------

def alpha(h):
    """alpha: q(x) sigma p(y) -> q(x) (x) sigma p(y), stored on the same keys."""
    return dict(h.terms)


def alpha_mul(n, a, b):
    """Product in C[x]^op (x) (C[y] x| S_N) of two alpha-images."""
    out = {}
    for (a1, s1, b1), c1 in a.items():
        for (a2, s2, b2), c2 in b.items():
            key = (
                tuple(p + q for p, q in zip(a1, a2)),
                compose(s1, s2),
                tuple(p + q for p, q in zip(permute_exponents(inverse(s2), b1), b2)),
            )
            _add_into(out, key, c1 * c2)
    return out


def alpha_commutes(a, b):
    """Whether alpha(a) and alpha(b) commute; both inputs must be central."""
    if a.n != b.n:
        raise ValueError("N mismatch")
    for h in (a, b):
        if not is_central(h):
            raise ValueError(f"alpha_commutes needs central inputs, got {h!r}")
    return alpha_mul(a.n, alpha(a), alpha(b)) == alpha_mul(a.n, alpha(b), alpha(a))
