"""N = 2 fixtures transcribed from the worked example, and checks against them.

Each display is stored as an expression string, copied term by term, and
evaluated by a small whitelisted AST walker (no ``eval``).  The checks
report, per fixture, whether the computed object agrees exactly.
"""
import ast
import operator
import random
from fractions import Fraction
from itertools import product

from .calogero import cm_universal_poly, generic_cm_point
from .cherednik import HElement, is_central, universal_central_poly
from .gaudin import bethe_matrix, matrices_commute
from .linalg import det_exact, matmul, solve_exact, trace
from .oracle import n2_display_operator, rdet_oracle
from .poly import MultiPoly, zl_vars
from .series import BiPoly

__all__ = [
    "PZ_DISPLAY",
    "PZ_FACTORED_DISPLAY",
    "Z_GENERATORS_DISPLAY",
    "PB_DISPLAY",
    "B_GENERATORS_DISPLAY",
    "PC_DISPLAY",
    "RELATION_DISPLAY",
    "safe_eval",
    "n2_relation",
    "relation_holds",
    "golden_checks",
]

# -- fixtures ----------------------------------------------------------------

PZ_FACTORED_DISPLAY = (
    "(1 - (v-x1)*(u-y1) - (v-x2)*(u-y2) + (v-x1)*(v-x2)*(u-y1)*(u-y2)) - s12"
)

PZ_DISPLAY = (
    "v**2*u**2 - (y1+y2)*v**2*u - (x1+x2)*v*u**2 + y1*y2*v**2 + x1*x2*u**2"
    " + ((x1+x2)*(y1+y2) - 2)*v*u"
    " - ((x1+x2)*y1*y2 - (y1+y2))*v - (x1*x2*(y1+y2) - (x1+x2))*u"
    " + 1 + x1*x2*y1*y2 - x1*y1 - x2*y2 - s12"
)

Z_GENERATORS_DISPLAY = ("x1+x2", "y1+y2", "x1*x2", "y1*y2", "x1*y1+x2*y2-s12")

PC_DISPLAY = (
    "u**2*v**2 - tr(Z)*v**2*u - tr(La)*v*u**2 + det(Z)*v**2 + det(La)*u**2"
    " + tr(La)*tr(Z)*v*u + (det(La)*tr(Z) - tr(La))*v"
    " + (det(Z)*tr(La) - tr(Z))*u + 1 + det(La*Z) - tr(La*Z)"
)

PB_DISPLAY = (
    "(u-z1)*(u-z2)*v**2 - ((l1+l2)*(u-z1)*(u-z2) + 2*u - z1 - z2)*v"
    " + 1 + l1*l2*z1*z2 - mat(l1*z1 + l2*z2, -1, -1, l1*z2 + l2*z1)"
)

B_GENERATORS_DISPLAY = ("l1+l2", "z1+z2", "l1*l2", "z1*z2", "mat(l1*z1+l2*z2, -1, -1, l1*z2+l2*z1)")

RELATION_DISPLAY = "T**2 - h1*g1*T + (g1**2 - 2*g2)*h2 + (h1**2 - 2*h2)*g2 - 1"

# -- a whitelisted evaluator ---------------------------------------------------

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Pow: operator.pow}
_UNARY = {ast.USub: operator.neg, ast.UAdd: operator.pos}


def safe_eval(expr, names, functions=None):
    """Evaluate an arithmetic expression over caller-supplied objects."""
    functions = functions or {}

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Pow):
                if not isinstance(right, int) or right < 0:
                    raise ValueError("exponents must be nonnegative integer literals")
            return _BINOPS[type(node.op)](left, right)
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
            return _UNARY[type(node.op)](walk(node.operand))
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise ValueError(f"unknown name {node.id!r}")
            return names[node.id]
        if (
            isinstance(node, ast.Call)
            and isinstance(node.func, ast.Name)
            and node.func.id in functions
            and not node.keywords
        ):
            return functions[node.func.id](*[walk(a) for a in node.args])
        raise ValueError(f"unsupported syntax: {ast.dump(node)}")

    return walk(ast.parse(expr, mode="eval"))


class _Mat2:
    """2x2 matrices over a commutative ring; scalars embed as multiples of 1."""

    def __init__(self, rows):
        self.rows = rows

    @classmethod
    def scalar(cls, c):
        return cls([[c, c * 0], [c * 0, c]])

    def _coerce(self, other):
        if isinstance(other, _Mat2):
            return other
        zero = self.rows[0][0] * 0
        return _Mat2.scalar(zero + other)

    def __add__(self, other):
        other = self._coerce(other)
        return _Mat2([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    __radd__ = __add__

    def __neg__(self):
        return _Mat2([[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.rows, other.rows
        return _Mat2(
            [[a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)] for i in range(2)]
        )

    __rmul__ = __mul__

    def __pow__(self, k):
        r = self._coerce(1)
        for _ in range(k):
            r = r * self
        return r


def _uv():
    return BiPoly({(1, 0): 1}), BiPoly({(0, 1): 1})


def _h2_names():
    n = 2
    u, v = _uv()
    return {
        "x1": HElement.x(n, 1),
        "x2": HElement.x(n, 2),
        "y1": HElement.y(n, 1),
        "y2": HElement.y(n, 2),
        "s12": HElement.s(n, 1, 2),
        "u": u,
        "v": v,
    }


def _pb_names():
    vs = zl_vars(2) + ("u", "v")
    names = {name: _Mat2.scalar(MultiPoly.var(vs, name)) for name in vs}

    def mat(a, b, c, d):
        def entry(x):
            return x.rows[0][0] if isinstance(x, _Mat2) else MultiPoly.const(vs, x)

        return _Mat2([[entry(a), entry(b)], [entry(c), entry(d)]])

    return names, {"mat": mat}


class _NumMat:
    def __init__(self, rows):
        self.rows = rows

    def __mul__(self, other):
        return _NumMat(matmul(self.rows, other.rows))

    def __pow__(self, k):
        r = self
        for _ in range(k - 1):
            r = r * self
        return r


def _bipoly_eq(a, b):
    keys = set(a.terms) | set(b.terms)
    return [k for k in sorted(keys) if a.terms.get(k, 0) - b.terms.get(k, 0)]


def _wrap_h(x):
    return x if isinstance(x, HElement) else HElement.scalar(2, x)


# -- individual checks ---------------------------------------------------------

def check_pz(fault=False):
    computed = universal_central_poly(2)
    if fault:
        computed = computed + BiPoly({(0, 0): HElement.one(2)})
    out = {}
    for label, text in (("pz_display", PZ_DISPLAY), ("pz_factored", PZ_FACTORED_DISPLAY)):
        shown = safe_eval(text, _h2_names())
        bad = _bipoly_eq(shown, computed)
        out[label] = {"passed": not bad, "mismatched_uv_degrees": [list(k) for k in bad]}
    return out


def check_z_generators():
    names = _h2_names()
    gens = [_wrap_h(safe_eval(t, names)) for t in Z_GENERATORS_DISPLAY]
    non_central = [t for t, g in zip(Z_GENERATORS_DISPLAY, gens) if not is_central(g)]
    return {"z_generators_central": {"passed": not non_central, "non_central": non_central}}


def check_pb():
    names, funcs = _pb_names()
    shown = safe_eval(PB_DISPLAY, names, funcs)
    computed = bethe_matrix(2)
    bad = []
    for r, c in product(range(2), range(2)):
        entry = shown.rows[r][c]
        parts = entry.split(("u", "v")) if isinstance(entry, MultiPoly) else {(0, 0): entry}
        keys = set(parts) | set(computed)
        for key in sorted(keys):
            want = computed[key][r][c] if key in computed else 0
            got = parts.get(key, 0)
            if got != want:
                bad.append({"uv_degree": list(key), "row": r, "col": c, "display": repr(got), "computed": repr(want)})
    return {"pb_display": {"passed": not bad, "mismatches": bad}}


def check_b_generators():
    names, funcs = _pb_names()
    vs = zl_vars(2)
    t = safe_eval(B_GENERATORS_DISPLAY[4], names, funcs)
    t_rows = [[e.split(("u", "v")).get((0, 0), MultiPoly.zero(vs)) for e in row] for row in t.rows]
    mats = bethe_matrix(2)
    bad = [list(k) for k, m in sorted(mats.items()) if not matrices_commute(t_rows, m)]
    return {"b_generator_T_commutes": {"passed": not bad, "fails_against_uv_degrees": bad}}


def check_pc(trials=5, seed=0):
    rng = random.Random(seed)
    vs = ("u", "v")
    bad = []
    for _ in range(trials):
        l0 = [Fraction(x) for x in rng.sample(range(-6, 7), 2)]
        d = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(2)]
        p = generic_cm_point(l0, d)
        names = {"u": MultiPoly.var(vs, "u"), "v": MultiPoly.var(vs, "v"), "Z": _NumMat(p.z), "La": _NumMat(p.lam)}
        funcs = {"tr": lambda m: trace(m.rows), "det": lambda m: det_exact(m.rows)}
        shown = safe_eval(PC_DISPLAY, names, funcs)
        shown = BiPoly({k: c.constant_term() for k, c in shown.split(vs).items()})
        diff = _bipoly_eq(shown, cm_universal_poly(p))
        if diff:
            bad.append({"l0": [str(x) for x in l0], "d": [str(x) for x in d], "mismatched_uv_degrees": [list(k) for k in diff]})
    return {"pc_display": {"passed": not bad, "mismatches": bad}}


def check_db(trials=5, seed=0):
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        z0 = [Fraction(k) + Fraction(1, rng.randint(2, 7)) for k in rng.sample(range(-6, 7), 2)]
        l0 = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(2)]
        a, b = rdet_oracle(z0, l0), n2_display_operator(z0, l0)
        same = all(
            a.coeffs[k][r][c] == b.coeffs[k][r][c]
            for k in range(3)
            for r in range(2)
            for c in range(2)
        )
        if not same:
            bad.append({"z0": [str(x) for x in z0], "l0": [str(x) for x in l0]})
    return {"db_display": {"passed": not bad, "mismatches": bad}}


# -- the quadratic relation for T --------------------------------------------------

def _weighted_monomials(max_weight):
    """Exponents (a, b, c, d) of g1^a g2^b h1^c h2^d with a + b + 2c + 2d <= max_weight."""
    out = []
    for c in range(max_weight // 2 + 1):
        for d in range((max_weight - 2 * c) // 2 + 1):
            rest = max_weight - 2 * c - 2 * d
            for a in range(rest + 1):
                for b in range(rest - a + 1):
                    out.append((a, b, c, d))
    return sorted(out)


def central_generators():
    """g1, g2, h1, h2 and the central T = x1 y1 + x2 y2 + s12 in H_2."""
    x1, x2, y1, y2 = (HElement.x(2, 1), HElement.x(2, 2), HElement.y(2, 1), HElement.y(2, 2))
    s = HElement.s(2, 1, 2)
    return {
        "g1": x1 + x2,
        "g2": y1 + y2,
        "h1": x1 * x2,
        "h2": y1 * y2,
        "T": x1 * y1 + x2 * y2 + s,
    }


def _gh_power(gens, e):
    r = HElement.one(2)
    for name, k in zip(("g1", "g2", "h1", "h2"), e):
        for _ in range(k):
            r = r * gens[name]
    return r


def n2_relation():
    """The relation T^2 + A T + B = 0 in H_2, found by exact elimination.

    Returns ``(A, B)`` as MultiPoly in (g1, g2, h1, h2).
    """
    gens = central_generators()
    t = gens["T"]
    mons_a = _weighted_monomials(2)
    mons_b = _weighted_monomials(4)
    columns = [_gh_power(gens, e) * t for e in mons_a] + [_gh_power(gens, e) for e in mons_b]
    target = -(t * t)
    keys = sorted(set().union(*(c.terms for c in columns), target.terms))
    matrix = [[col.terms.get(k, 0) for col in columns] for k in keys]
    rhs = [target.terms.get(k, 0) for k in keys]
    sol, unique = solve_exact(matrix, rhs)
    if not unique:
        raise ArithmeticError("relation is not unique; 1 and T are not independent")
    gv = ("g1", "g2", "h1", "h2")
    a = MultiPoly(gv, {e: c for e, c in zip(mons_a, sol[: len(mons_a)])})
    b = MultiPoly(gv, {e: c for e, c in zip(mons_b, sol[len(mons_a):])})
    return a, b


def relation_holds(text, t_value=None):
    """Evaluate a relation string at the H_2 generators; True when it vanishes."""
    gens = central_generators()
    if t_value is not None:
        gens = dict(gens, T=t_value)
    val = _wrap_h(safe_eval(text, gens))
    return not val


def check_relation():
    names = _h2_names()
    display_t = _wrap_h(safe_eval(Z_GENERATORS_DISPLAY[4], names))
    gens = central_generators()
    swapped = dict(gens, g2=gens["h1"], h1=gens["g2"])
    return {
        "relation_display": {
            "passed": relation_holds(RELATION_DISPLAY, display_t),
            "passed_with_central_T": relation_holds(RELATION_DISPLAY),
            "passed_with_central_T_and_g2_h1_swapped": not _wrap_h(safe_eval(RELATION_DISPLAY, swapped)),
        }
    }


def golden_checks(fault=False):
    """All N = 2 fixture comparisons: ``{name: {"passed": bool, ...}}``.

    ``fault`` shifts the computed constant term of P^Z by one.
    """
    out = {}
    out.update(check_pz(fault))
    out.update(check_z_generators())
    out.update(check_pb())
    out.update(check_b_generators())
    out.update(check_pc())
    out.update(check_db())
    out.update(check_relation())
    return out
