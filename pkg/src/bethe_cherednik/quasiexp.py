"""Spaces of quasi-exponentials q(u) e^{mu u} with rational exponents.

Exponentials are factored out symbolically: the k-th derivative of
``q e^{mu u}`` is ``p_k e^{mu u}`` with ``p_0 = q``, ``p_{k+1} = p_k' + mu p_k``.
"""
from collections import OrderedDict
from fractions import Fraction

from .calogero import char_poly, cm_psi, cm_universal_poly, generic_cm_point
from .linalg import det_exact, rank
from .poly import parse_rational, rational_str
from .series import expand_rational
from .upoly import RatFunc, UPoly

__all__ = [
    "QExpSpace",
    "wronskian",
    "kernel_operator",
    "qexp_psi",
    "classify",
    "adjoin_exponential",
    "apply_kernel",
    "wilson_space",
    "wilson_shifts",
    "singular_shifts",
    "verify_wilson",
]


class QExpSpace:
    """Span of ``q_i(u) e^{mu_i u}``; ``basis`` is a list of (UPoly, Fraction)."""

    __slots__ = ("basis",)

    def __init__(self, basis):
        clean = []
        for q, mu in basis:
            if not isinstance(q, UPoly):
                q = UPoly(q)
            if not q:
                raise ValueError("basis polynomials must be nonzero")
            clean.append((q, Fraction(mu)))
        if not clean:
            raise ValueError("a quasi-exponential space needs at least one basis element")
        self.basis = clean

    @property
    def dim(self):
        return len(self.basis)

    def exponents(self):
        return [mu for _, mu in self.basis]

    def to_json(self):
        return {"basis": [{"q": q.to_json(), "exp": rational_str(mu)} for q, mu in self.basis]}

    @classmethod
    def from_json(cls, data):
        return cls([(UPoly.from_json(b["q"]), parse_rational(b["exp"])) for b in data["basis"]])

    def __repr__(self):
        return "QExpSpace(" + ", ".join(f"({q!r})e^({mu}u)" for q, mu in self.basis) + ")"


def _derivatives(q, mu, count):
    out = [q]
    for _ in range(count - 1):
        p = out[-1]
        out.append(p.derivative() + p.scale(mu))
    return out


def _wronskian_det(space):
    n = space.dim
    rows = [_derivatives(q, mu, n) for q, mu in space.basis]
    d = det_exact(rows)
    if not d:
        raise ValueError("basis is linearly dependent (zero Wronskian)")
    return d


def wronskian(space):
    """The monic Wronskian polynomial Wr_W."""
    return _wronskian_det(space).monic()


def _bordered_coeffs(space):
    """Coefficients ``a_k(u)`` of v^k in the bordered determinant, a_n = det."""
    n = space.dim
    rows = [_derivatives(q, mu, n + 1) for q, mu in space.basis]
    coeffs = []
    for k in range(n + 1):
        minor = [row[:k] + row[k + 1:] for row in rows]
        c = det_exact(minor) if n else UPoly([1])
        coeffs.append(c if (n + k) % 2 == 0 else -c)
    if not coeffs[n]:
        raise ValueError("basis is linearly dependent (zero Wronskian)")
    return coeffs


def kernel_operator(space):
    """[G_1, ..., G_n] with D^W = d^n + sum_i G_i(u) d^(n-i), as RatFuncs."""
    coeffs = _bordered_coeffs(space)
    n = space.dim
    top = coeffs[n]
    return [RatFunc(coeffs[n - i], top) for i in range(1, n + 1)]


def apply_kernel(space, q, mu):
    """D^W (q e^{mu u}) divided by e^{mu u}, as a RatFunc."""
    ops = [RatFunc(1)] + kernel_operator(space)
    n = space.dim
    ders = _derivatives(UPoly(q) if not isinstance(q, UPoly) else q, Fraction(mu), n + 1)
    total = RatFunc(0)
    for i, g in enumerate(ops):
        total = total + g * RatFunc(ders[n - i])
    return total


def qexp_psi(space, order):
    """Psi^W = D^W(u, v) / prod_i (v - mu_i), expanded to ``order``."""
    coeffs = _bordered_coeffs(space)
    n = space.dim
    lead = Fraction(coeffs[n].lc())
    numer = {}
    for k, c in enumerate(coeffs):
        for du, a in enumerate(c.c):
            if a:
                numer[du, k] = Fraction(a) / lead
    denom_v = UPoly.from_roots(space.exponents())
    return expand_rational(numer, coeffs[n].monic(), denom_v, order)


def _groups(space):
    groups = OrderedDict()
    for q, mu in space.basis:
        groups.setdefault(mu, []).append(q)
    return groups


def _contains_one(qs):
    width = max(q.degree() for q in qs) + 1
    mat = [[q.c[k] if k < len(q.c) else 0 for k in range(width)] for q in qs]
    one = [1] + [0] * (width - 1)
    return rank(mat + [one]) == rank(mat)


def classify(space):
    """Minimal / canonical / generic flags and the subspaces W(mu).

    W(mu) is spanned by the basis elements with exponent mu.
    """
    wr = wronskian(space)
    subspaces = {}
    minimal = True
    canonical = True
    for mu, qs in _groups(space).items():
        sub = QExpSpace([(q, mu) for q in qs])
        deg = wronskian(sub).degree()
        subspaces[mu] = {"dim": len(qs), "deg": deg, "basis": qs}
        if _contains_one(qs):
            minimal = False
        if len(qs) != deg:
            canonical = False
    exps = space.exponents()
    generic = len(set(exps)) == len(exps) and all(q.degree() == 1 for q, _ in space.basis)
    return {
        "is_generic": generic,
        "is_minimal": minimal,
        "is_canonical": canonical,
        "degree": wr.degree(),
        "dim": space.dim,
        "subspaces": subspaces,
    }


def _antiderivative(q):
    return UPoly([0] + [Fraction(a) / (k + 1) for k, a in enumerate(q.c)])


def adjoin_exponential(space, mu):
    """The equivalent space (d - mu)^-1 W + <e^{mu u}>.

    Each basis element q e^{lam u} is replaced by its preimage p e^{lam u}
    under d - mu; the result has the same Psi-function and one more dimension.
    """
    mu = Fraction(mu)
    basis = []
    for q, lam in space.basis:
        if lam == mu:
            p = _antiderivative(q)
        else:
            gap = lam - mu
            p = UPoly()
            der = q
            k = 0
            while der:
                p = p + der.scale(Fraction((-1) ** k) / gap ** (k + 1))
                der = der.derivative()
                k += 1
        basis.append((p, lam))
    basis.append((UPoly([1]), mu))
    return QExpSpace(basis)


# -- the Wilson correspondence at generic points ---------------------------

def wilson_shifts(l0, d):
    """Roots h_i of the quasi-polynomials matching generic_cm_point(l0, d).

    ``h_i = d_i + sum_{j != i} 1/(l0_i - l0_j)``.
    """
    l0 = [Fraction(x) for x in l0]
    return [
        Fraction(d[i]) + sum((1 / (l0[i] - l0[j]) for j in range(len(l0)) if j != i), Fraction(0))
        for i in range(len(l0))
    ]


def wilson_space(l0, d):
    """W = <(u - h_i) e^{l0_i u}>."""
    return QExpSpace([(UPoly.linear(h), mu) for h, mu in zip(wilson_shifts(l0, d), l0)])


def singular_shifts(point, exponents):
    """Derive h_i from the point itself: h_i = u + S_v(u, mu_i) / S(u, mu_i).

    S(u, v) = P^C / det(u - Z) is the symbol of the kernel operator, and
    D(d + mu)(u - h) = 0 forces the formula; the result must be constant in u.
    """
    pc = cm_universal_poly(point)
    out = []
    for mu in exponents:
        mu = Fraction(mu)
        s = UPoly()
        sv = UPoly()
        for (du, dv), c in pc.terms.items():
            mono = [0] * du + [1]
            s = s + UPoly(mono).scale(c * mu ** dv)
            if dv:
                sv = sv + UPoly(mono).scale(c * dv * mu ** (dv - 1))
        h = RatFunc(UPoly([0, 1])) + RatFunc(sv, s)
        if not h.is_polynomial() or h.num.degree() > 0:
            raise ArithmeticError(f"shift at exponent {mu} is not constant: {h!r}")
        out.append(h.num(0))
    return out


def verify_wilson(l0, d, order=8):
    """Psi^C of the generic point equals Psi^W of the matching space.

    Returns ``(ok, info)``; also checks the exponents against the spectrum
    of L and the Wronskian against the characteristic polynomial of Z.
    """
    point = generic_cm_point(l0, d)
    space = wilson_space(l0, d)
    checks = {
        "psi": cm_psi(point, order) == qexp_psi(space, order),
        "exponents": char_poly(point.lam) == UPoly.from_roots(space.exponents()),
        "wronskian": char_poly(point.z) == wronskian(space),
    }
    return all(checks.values()), checks
