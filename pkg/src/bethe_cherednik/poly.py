"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`MultiPoly` is a mapping from exponent tuples to nonzero
coefficients over a fixed, ordered tuple of variable names.  Coefficients
are stored as ``int`` when integral and as :class:`fractions.Fraction`
otherwise; both are exact and compare equal across the two types.
"""
from fractions import Fraction
from numbers import Rational
from operator import add

__all__ = [
    "MultiPoly",
    "normalize_coeff",
    "rational_str",
    "parse_rational",
    "zl_vars",
    "grlex_key",
]


def normalize_coeff(c):
    """Return ``c`` as an ``int`` if integral, else as a reduced Fraction."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return normalize_coeff(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not an exact rational: {c!r}")


def rational_str(c):
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s):
    return normalize_coeff(Fraction(s))


def zl_vars(n):
    """Variable names ``z1..zN, l1..lN`` (``l`` stands for lambda)."""
    return tuple(f"z{i}" for i in range(1, n + 1)) + tuple(
        f"l{i}" for i in range(1, n + 1)
    )


def grlex_key(e):
    return (sum(e), e)


def _is_scalar(x):
    return isinstance(x, (int, Fraction)) or (
        isinstance(x, Rational) and not isinstance(x, bool)
    )


class MultiPoly:
    """Polynomial over a fixed tuple of variables.

    Instances are treated as immutable values.  Arithmetic between
    polynomials requires identical variable tuples; Python scalars
    (``int``, ``Fraction``) are promoted to constants.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables, terms=None, _trusted=False):
        self.vars = tuple(variables)
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        n = len(self.vars)
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(
                        f"exponent {e} has arity {len(e)}, expected {n}"
                    )
                c = normalize_coeff(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, variables):
        return cls(variables, {}, _trusted=True)

    @classmethod
    def const(cls, variables, c):
        variables = tuple(variables)
        c = normalize_coeff(c)
        if not c:
            return cls.zero(variables)
        return cls(variables, {(0,) * len(variables): c}, _trusted=True)

    @classmethod
    def var(cls, variables, name, power=1):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = power
        return cls(variables, {tuple(e): 1}, _trusted=True)

    @classmethod
    def monomial(cls, variables, exps, c=1):
        return cls(variables, {tuple(exps): c})

    def gens(self):
        return [MultiPoly.var(self.vars, v) for v in self.vars]

    # -- basic queries ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, name):
        k = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[k] for e in self.terms)

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        return max(self.terms.items(), key=lambda t: grlex_key(t[0]))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(
                    f"variable-set mismatch: {self.vars} vs {other.vars}"
                )
            return other
        if _is_scalar(other):
            return MultiPoly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        res = dict(big)
        for e, c in small.items():
            s = res.get(e, 0) + c
            if s:
                res[e] = normalize_coeff(s)
            else:
                res.pop(e, None)
        return MultiPoly(self.vars, res, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()}, _trusted=True)

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
            return MultiPoly.zero(self.vars)
        return MultiPoly(
            self.vars,
            {e: normalize_coeff(v * c) for e, v in self.terms.items()},
            _trusted=True,
        )

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        res = {}
        get = res.get
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(map(add, ea, eb))
                res[e] = get(e, 0) + ca * cb
        return MultiPoly(
            self.vars,
            {e: normalize_coeff(c) for e, c in res.items() if c},
            _trusted=True,
        )

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if _is_scalar(other):
            return self.scale(Fraction(1) / Fraction(other))
        return self.exact_div(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other):
        """Quotient ``self / other``; raises ``ArithmeticError`` if inexact."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = other.leading_term()
        rem = self
        quot = {}
        while rem.terms:
            e, c = rem.leading_term()
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if min(diff) < 0:
                raise ArithmeticError("polynomial division is not exact")
            q = normalize_coeff(Fraction(c) / lead_c)
            quot[diff] = q
            rem = rem - other * MultiPoly(self.vars, {diff: q}, _trusted=True)
        return MultiPoly(self.vars, quot)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if _is_scalar(other):
            other = normalize_coeff(other)
            if not other:
                return not self.terms
            return self.terms == {(0,) * len(self.vars): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- substitution -----------------------------------------------------
    def permute_vars(self, mapping):
        """Send variable ``k`` to variable ``mapping[k]`` (index map)."""
        n = len(self.vars)
        res = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for k, a in enumerate(e):
                if a:
                    ne[mapping[k]] += a
            res[tuple(ne)] = c
        return MultiPoly(self.vars, res, _trusted=True)

    def evaluate(self, values):
        """Evaluate at ``values`` (sequence aligned with ``vars`` or dict)."""
        if isinstance(values, dict):
            values = [values[v] for v in self.vars]
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, a in zip(values, e):
                if a:
                    t = t * x ** a
            total = total + t
        return normalize_coeff(total) if _is_scalar(total) else total

    def subs(self, assignment):
        """Partially evaluate: ``assignment`` maps variable names to scalars."""
        idx = {self.vars.index(k): v for k, v in assignment.items()}
        res = {}
        for e, c in self.terms.items():
            ne = list(e)
            for k, val in idx.items():
                if ne[k]:
                    c = c * Fraction(val) ** ne[k]
                    ne[k] = 0
            ne = tuple(ne)
            res[ne] = res.get(ne, 0) + c
        return MultiPoly(self.vars, res)

    def split(self, names):
        """Coefficients with respect to the variables ``names``.

        Returns ``{exps_in_names: MultiPoly over the remaining variables}``.
        """
        names = tuple(names)
        pick = [self.vars.index(n) for n in names]
        rest = [k for k in range(len(self.vars)) if k not in pick]
        rest_vars = tuple(self.vars[k] for k in rest)
        out = {}
        for e, c in self.terms.items():
            key = tuple(e[k] for k in pick)
            sub = tuple(e[k] for k in rest)
            out.setdefault(key, {})[sub] = c
        return {k: MultiPoly(rest_vars, v, _trusted=True) for k, v in out.items()}

    def extend_vars(self, variables):
        """Embed into a larger variable tuple containing ``self.vars``."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.vars]
        n = len(variables)
        res = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for k, a in zip(pos, e):
                ne[k] = a
            res[tuple(ne)] = c
        return MultiPoly(variables, res, _trusted=True)

    # -- serialization ----------------------------------------------------
    def to_json(self):
        return {
            "vars": list(self.vars),
            "terms": [
                {
                    "e": list(e),
                    "n": str(Fraction(c).numerator),
                    "d": str(Fraction(c).denominator),
                }
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        terms = {
            tuple(t["e"]): Fraction(int(t["n"]), int(t["d"])) for t in data["terms"]
        }
        return cls(data["vars"], terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if a == 1 else f"{v}^{a}" for v, a in zip(self.vars, e) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
