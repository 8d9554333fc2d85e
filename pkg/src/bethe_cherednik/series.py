"""Bivariate polynomials in (u, v) and truncated series in (1/u, 1/v).

Both containers are generic in the coefficient ring: coefficients only
need ``+``, ``-``, ``*`` and multiplication by Python rationals, with the
integer ``0`` acting as additive identity.  Products keep the left/right
order of coefficients, so noncommutative coefficients are allowed in
:class:`BiPoly`.
"""
from fractions import Fraction

from .poly import MultiPoly, rational_str, parse_rational
from .upoly import UPoly

__all__ = ["BiPoly", "TruncSeries", "series_invert", "expand_rational"]


class BiPoly:
    """Polynomial in u and v: ``{(deg_u, deg_v): coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def from_multipoly(cls, p, u="u", v="v"):
        """Split a :class:`MultiPoly` containing ``u`` and ``v``."""
        return cls(p.split((u, v)))

    def coeff(self, du, dv):
        return self.terms.get((du, dv), 0)

    def degree_u(self):
        return max((k[0] for k in self.terms), default=-1)

    def degree_v(self):
        return max((k[1] for k in self.terms), default=-1)

    def map(self, f):
        return BiPoly({k: f(c) for k, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly({(0, 0): other})
        res = dict(self.terms)
        for k, c in other.terms.items():
            res[k] = res[k] + c if k in res else c
        return BiPoly(res)

    def __radd__(self, other):
        return BiPoly({(0, 0): other}) + self

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __rmul__(self, other):
        return BiPoly({k: other * c for k, c in self.terms.items()})

    def __pow__(self, k):
        r = BiPoly({(0, 0): 1})
        for _ in range(k):
            r = r * self
        return r

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            return BiPoly({k: c * other for k, c in self.terms.items()})
        res = {}
        for (a, b), c in self.terms.items():
            for (p, q), d in other.terms.items():
                k = (a + p, b + q)
                t = c * d
                res[k] = res[k] + t if k in res else t
        return BiPoly(res)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(_eq(self.terms.get(k, 0), other.terms.get(k, 0)) for k in keys)

    __hash__ = None

    def __repr__(self):
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                s for s in (
                    "" if a == 0 else ("u" if a == 1 else f"u^{a}"),
                    "" if b == 0 else ("v" if b == 1 else f"v^{b}"),
                ) if s
            )
            text = str(c) if isinstance(c, (int, Fraction)) else repr(c)
            parts.append(f"({text})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) or "0"


def _eq(a, b):
    d = a - b
    return not d


class TruncSeries:
    """Series ``sum c[i,j] u^-i v^-j`` with 0 <= i, j <= order.

    Coefficients beyond ``order`` are undefined; every operation truncates
    to the smaller order of its operands.
    """

    __slots__ = ("order", "c")

    def __init__(self, order, coeffs=None):
        if order < 0:
            raise ValueError("order must be nonnegative")
        self.order = order
        self.c = {
            (i, j): v
            for (i, j), v in (coeffs or {}).items()
            if i <= order and j <= order and v
        }

    @classmethod
    def one(cls, order):
        return cls(order, {(0, 0): 1})

    @classmethod
    def from_table(cls, table):
        order = len(table) - 1
        return cls(order, {(i, j): x for i, row in enumerate(table) for j, x in enumerate(row)})

    def __getitem__(self, key):
        return self.c.get(key, 0)

    def table(self):
        return [[self[i, j] for j in range(self.order + 1)] for i in range(self.order + 1)]

    def truncate(self, order):
        return TruncSeries(min(order, self.order), self.c)

    def map(self, f):
        return TruncSeries(self.order, {k: f(v) for k, v in self.c.items()})

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries(self.order, {(0, 0): other})
        t = min(self.order, other.order)
        res = {k: v for k, v in self.c.items()}
        for k, v in other.c.items():
            res[k] = res[k] + v if k in res else v
        return TruncSeries(t, res)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, {k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.order, {k: v * other for k, v in self.c.items()})
        t = min(self.order, other.order)
        res = {}
        for (i, j), a in self.c.items():
            if i > t or j > t:
                continue
            for (p, q), b in other.c.items():
                if i + p > t or j + q > t:
                    continue
                k = (i + p, j + q)
                x = a * b
                res[k] = res[k] + x if k in res else x
        return TruncSeries(t, res)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = TruncSeries.one(self.order)
        for _ in range(k):
            r = r * self
        return r

    def _powers_without_constant(self):
        """Yield x, x^2, ... until truncation kills them (needs c[0,0] = 0)."""
        p = self
        while p.c:
            yield p
            p = p * self

    def invert(self):
        return series_invert(self)

    def log(self):
        """Logarithm of a series with constant term 1."""
        if self[0, 0] != 1:
            raise ValueError("log needs constant term 1")
        x = self - 1
        res = TruncSeries(self.order)
        for k, p in enumerate(x._powers_without_constant(), start=1):
            res = res + p * Fraction((-1) ** (k + 1), k)
        return res

    def exp(self):
        """Exponential of a series with zero constant term."""
        if self[0, 0]:
            raise ValueError("exp needs zero constant term")
        res = TruncSeries.one(self.order)
        fact = 1
        for k, p in enumerate(self._powers_without_constant(), start=1):
            fact *= k
            res = res + p * Fraction(1, fact)
        return res

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        t = min(self.order, other.order)
        keys = {k for k in set(self.c) | set(other.c) if k[0] <= t and k[1] <= t}
        return all(_eq(self[k], other[k]) for k in keys)

    __hash__ = None

    def to_json(self):
        return {
            "order": self.order,
            "c": [[rational_str(x) for x in row] for row in self.table()],
        }

    @classmethod
    def from_json(cls, data):
        return cls.from_table([[parse_rational(s) for s in row] for row in data["c"]])

    def __repr__(self):
        items = sorted(self.c.items())
        body = ", ".join(f"[{i},{j}]={v!r}" for (i, j), v in items)
        return f"TruncSeries(order={self.order}; {body})"


def series_invert(s):
    """Multiplicative inverse of a series with constant term 1."""
    if s[0, 0] != 1:
        raise ValueError("series_invert needs constant term 1")
    t = s.order
    b = {(0, 0): 1}
    rest = [(k, v) for k, v in s.c.items() if k != (0, 0)]
    for i in range(t + 1):
        for j in range(t + 1):
            if i == 0 and j == 0:
                continue
            acc = 0
            for (p, q), a in rest:
                if p <= i and q <= j:
                    prev = b.get((i - p, j - q))
                    if prev is not None:
                        acc = acc + a * prev
            if acc:
                b[i, j] = -acc
    return TruncSeries(t, b)


def _inverse_at_infinity(d, order):
    """Coefficients of ``u^deg / d(u)`` in powers of 1/u, up to ``order``."""
    if not isinstance(d, UPoly):
        d = UPoly(d)
    if d.is_zero() or d.lc() != 1:
        raise ValueError("denominator must be monic")
    a = d.degree()
    rev = [d.c[a - k] for k in range(a + 1)]  # rev[0] == 1
    inv = [Fraction(0)] * (order + 1)
    inv[0] = Fraction(1)
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, min(n, a) + 1):
            acc += rev[k] * inv[n - k]
        inv[n] = -acc
    return a, inv


def expand_rational(numer, denom_u, denom_v, order):
    """Expand ``numer / (denom_u(u) * denom_v(v))`` at u, v -> infinity.

    ``numer`` is a :class:`BiPoly`, a dict ``{(deg_u, deg_v): c}`` or a
    :class:`MultiPoly` in ``("u", "v")``.  Denominators are monic
    :class:`UPoly`; the numerator degrees may not exceed theirs.
    """
    if isinstance(numer, MultiPoly):
        numer = {k: p.constant_term() for k, p in numer.split(("u", "v")).items()}
    elif isinstance(numer, BiPoly):
        numer = numer.terms
    a, inv_u = _inverse_at_infinity(denom_u, order)
    b, inv_v = _inverse_at_infinity(denom_v, order)
    res = {}
    for (p, q), c in numer.items():
        if not c:
            continue
        if p > a or q > b:
            raise ValueError(
                f"numerator term u^{p} v^{q} exceeds denominator degrees ({a}, {b})"
            )
        si, sj = a - p, b - q
        for i in range(si, order + 1):
            cu = inv_u[i - si]
            if not cu:
                continue
            for j in range(sj, order + 1):
                cv = inv_v[j - sj]
                if cv:
                    k = (i, j)
                    x = c * cu * cv
                    res[k] = res[k] + x if k in res else x
    return TruncSeries(order, res)
