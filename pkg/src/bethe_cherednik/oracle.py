"""Row-determinant oracle for the Bethe operator at specialized parameters.

At z = z0, l = l0 the universal operator is the row determinant of

    A[j][k] = delta_jk (d - l0_k) - e_kj(u),

with ``e_kj(u)`` acting on V^{(x)N} through the evaluation points:
``e_kj(u) = sum_s e_kj^{(s)} / (u - z0_s)``.  Operators are composed with
``d o f(u) = f(u) d + f'(u)`` over exact rational functions, so any pole
that fails to cancel stays visible in the result.
"""
from fractions import Fraction

from .gaudin import specialized_bethe_matrices
from .symgroup import all_perms, perm_sign
from .upoly import RatFunc, UPoly

__all__ = [
    "DiffOp",
    "rdet_oracle",
    "n2_display_operator",
    "oracle_agreement",
    "closed_form_polynomials",
]


def _add_to(vec, key, val):
    if key in vec:
        val = vec[key] + val
    if val:
        vec[key] = val
    else:
        vec.pop(key, None)


class _State:
    """An operator applied to a constant vector: ``sum_k w_k(u) d^k``."""

    def __init__(self, parts=None):
        self.parts = {k: dict(v) for k, v in (parts or {}).items() if v}

    @classmethod
    def vector(cls, word):
        return cls({0: {tuple(word): RatFunc(1)}})

    def __add__(self, other):
        res = {k: dict(v) for k, v in self.parts.items()}
        for k, vec in other.parts.items():
            tgt = res.setdefault(k, {})
            for b, f in vec.items():
                _add_to(tgt, b, f)
        return _State(res)

    def scale(self, c):
        return _State({k: {b: f * c for b, f in v.items()} for k, v in self.parts.items()})

    def d(self):
        """Left composition with d/du."""
        res = {}
        for k, vec in self.parts.items():
            up = res.setdefault(k + 1, {})
            same = res.setdefault(k, {})
            for b, f in vec.items():
                _add_to(up, b, f)
                _add_to(same, b, f.derivative())
        return _State(res)

    def e(self, c, r, z0, deriv=False):
        """Left multiplication by e_cr(u) (or its u-derivative)."""
        res = {}
        for k, vec in self.parts.items():
            tgt = res.setdefault(k, {})
            for b, f in vec.items():
                for s, letter in enumerate(b):
                    if letter != r:
                        continue
                    g = RatFunc.pole(z0[s], 2 if deriv else 1)
                    if deriv:
                        g = -g
                    nb = b[:s] + (c,) + b[s + 1:]
                    _add_to(tgt, nb, f * g)
        return _State(res)


class DiffOp:
    """Monic operator ``sum_k C_k(u) d^k`` with matrix coefficients over eps_tau."""

    def __init__(self, order, basis, coeffs, stray=None):
        self.order = order
        self.basis = basis
        self.coeffs = coeffs  # coeffs[k][row][col] is a RatFunc
        self.stray = stray or []

    def is_monic(self):
        top = self.coeffs[self.order]
        return all(
            top[r][c] == (1 if r == c else 0)
            for r in range(len(self.basis))
            for c in range(len(self.basis))
        )

    def to_json(self):
        return {
            "order": self.order,
            "basis": [[i + 1 for i in p] for p in self.basis],
            "coeffs": [
                [[f.to_json() for f in row] for row in self.coeffs[k]]
                for k in range(self.order + 1)
            ],
        }


def _to_diffop(n, states):
    basis = all_perms(n)
    size = len(basis)
    coeffs = [[[RatFunc(0)] * size for _ in range(size)] for _ in range(n + 1)]
    stray = []
    words = {tuple(p): r for r, p in enumerate(basis)}
    for col, st in enumerate(states):
        for k, vec in st.parts.items():
            for word, f in vec.items():
                if word not in words:
                    stray.append((k, word, col))
                    continue
                coeffs[k][words[word]][col] = f
    return DiffOp(n, basis, coeffs, stray)


def _check_points(z0, l0):
    z0 = [Fraction(x) for x in z0]
    l0 = [Fraction(x) for x in l0]
    if len(z0) != len(l0):
        raise ValueError("z0 and l0 must have equal length")
    if len(set(z0)) != len(z0):
        raise ValueError("evaluation points z0 must be pairwise distinct")
    return z0, l0


def rdet_oracle(z0, l0):
    """The Bethe operator at (z0, l0) as a :class:`DiffOp`, via the row determinant."""
    z0, l0 = _check_points(z0, l0)
    n = len(z0)
    states = []
    for tau in all_perms(n):
        total = _State()
        for sigma in all_perms(n):
            st = _State.vector(tau)
            for r in range(n - 1, -1, -1):
                c = sigma[r]
                nxt = st.e(c, r, z0).scale(-1)
                if c == r:
                    nxt = nxt + st.d() + st.scale(-l0[r])
                st = nxt
            total = total + st.scale(perm_sign(sigma))
        states.append(total)
    return _to_diffop(n, states)


def n2_display_operator(z0, l0):
    """d^2 - (l1 + l2 + e11 + e22) d + (l1 + e11)(l2 + e22) - e21 e12 - e22'."""
    z0, l0 = _check_points(z0, l0)
    if len(z0) != 2:
        raise ValueError("the displayed operator is for N = 2")
    l1, l2 = l0
    states = []
    for tau in all_perms(2):
        v = _State.vector(tau)
        dv = v.d()
        first = dv.scale(-(l1 + l2)) + dv.e(0, 0, z0).scale(-1) + dv.e(1, 1, z0).scale(-1)
        right = v.scale(l2) + v.e(1, 1, z0)
        prod = right.scale(l1) + right.e(0, 0, z0)
        cross = v.e(0, 1, z0).e(1, 0, z0).scale(-1)
        deriv = v.e(1, 1, z0, deriv=True).scale(-1)
        states.append(dv.d() + first + prod + cross + deriv)
    return _to_diffop(2, states)


def closed_form_polynomials(z0, l0):
    """``{(dv, row, col): UPoly}`` from the closed form at (z0, l0)."""
    mats = specialized_bethe_matrices(z0, l0)
    out = {}
    for (du, dv), m in mats.items():
        for r, row in enumerate(m):
            for c, val in enumerate(row):
                if val:
                    key = (dv, r, c)
                    cs = list(out[key].c) if key in out else []
                    cs += [0] * (du + 1 - len(cs))
                    cs[du] += val
                    out[key] = UPoly(cs)
    return out


def oracle_agreement(z0, l0, op=None):
    """Compare ``w(u) * C_k(u)`` with the closed form's v^k coefficient.

    Returns ``(ok, info)``; ``info`` lists residual poles and mismatches.
    """
    z0, l0 = _check_points(z0, l0)
    n = len(z0)
    op = op or rdet_oracle(z0, l0)
    w = UPoly.from_roots(z0)
    expected = closed_form_polynomials(z0, l0)
    size = len(op.basis)
    poles, mismatches = [], []
    for k in range(n + 1):
        for r in range(size):
            for c in range(size):
                prod = op.coeffs[k][r][c] * w
                if not prod.is_polynomial():
                    poles.append({"k": k, "row": r, "col": c, "den": prod.den.to_json()})
                    continue
                want = expected.get((k, r, c), UPoly())
                if prod.num != want:
                    mismatches.append({"k": k, "row": r, "col": c})
    ok = not poles and not mismatches and not op.stray and op.is_monic()
    return ok, {"poles": poles, "mismatches": mismatches, "stray": op.stray}
