"""Polynomial representation of H_N on C[z, l] by Dunkl-type operators.

x_i acts as multiplication by l_i, s_ij as the simultaneous swap of
(z_i, l_i) with (z_j, l_j), and y_i as

    K_i = z_i + sum_{j != i} s^z_ij (1 / (l_i - l_j)) (1 - s^l_ij).
"""
from .cherednik import HElement
from .gaudin import pr_iota_inv
from .poly import MultiPoly, zl_vars
from .symgroup import act, transposition

__all__ = ["dunkl_apply", "swap", "polyrep_relations", "polyrep_check", "he_lift", "intertwining_check"]


def _nvars(p):
    return len(p.vars) // 2


def swap(i, j, p, mode="zl"):
    """s_ij on ``p`` (1-based indices)."""
    n = _nvars(p)
    return act(transposition(n, i - 1, j - 1), p, mode)


def dunkl_apply(i, p):
    """K_i p for 1-based ``i``."""
    n = _nvars(p)
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range for N={n}")
    vs = zl_vars(n)
    out = MultiPoly.var(vs, f"z{i}") * p
    li = MultiPoly.var(vs, f"l{i}")
    for j in range(1, n + 1):
        if j == i:
            continue
        diff = p - swap(i, j, p, "l")
        if not diff:
            continue
        q = diff.exact_div(li - MultiPoly.var(vs, f"l{j}"))
        out = out + swap(i, j, q, "z")
    return out


def polyrep_relations(n, dunkl=dunkl_apply):
    """The defining relations of H_N as ``(name, lhs, rhs)`` operator pairs."""
    vs = zl_vars(n)

    def x(i):
        lam = MultiPoly.var(vs, f"l{i}")
        return lambda p: lam * p

    def y(i):
        return lambda p: dunkl(i, p)

    def s(i, j):
        return lambda p: swap(i, j, p)

    def comm(a, b):
        return lambda p: a(b(p)) - b(a(p))

    zero = lambda p: p * 0  # noqa: E731
    rels = []
    idx = range(1, n + 1)
    for i in idx:
        for j in idx:
            if i < j:
                rels.append((f"[x{i},x{j}]=0", comm(x(i), x(j)), zero))
                rels.append((f"[y{i},y{j}]=0", comm(y(i), y(j)), zero))
            if i != j:
                rels.append((f"[x{i},y{j}]=s{i}{j}", comm(x(i), y(j)), s(i, j)))
        others = [a for a in idx if a != i]
        rels.append(
            (
                f"[x{i},y{i}]=-sum s{i}a",
                comm(x(i), y(i)),
                lambda p, i=i, others=others: sum((-swap(i, a, p) for a in others), p * 0),
            )
        )
    for k in range(1, n):
        t = s(k, k + 1)
        perm = {k: k + 1, k + 1: k}
        for i in idx:
            j = perm.get(i, i)
            rels.append((f"s{k}{k + 1} x{i} = x{j} s{k}{k + 1}", lambda p, t=t, i=i: t(x(i)(p)), lambda p, t=t, j=j: x(j)(t(p))))
            rels.append((f"s{k}{k + 1} y{i} = y{j} s{k}{k + 1}", lambda p, t=t, i=i: t(y(i)(p)), lambda p, t=t, j=j: y(j)(t(p))))
    return rels


def polyrep_check(samples, n=None, dunkl=dunkl_apply):
    """Whether every relation holds on every sample.

    Returns ``(ok, first_failure)``.
    """
    if not samples:
        return True, None
    n = n or _nvars(samples[0])
    for name, lhs, rhs in polyrep_relations(n, dunkl):
        for p in samples:
            if lhs(p) != rhs(p):
                return False, {"relation": name, "sample": repr(p)}
    return True, None


def he_lift(p):
    """``sum c l^a z^b -> sum c x^a y^b e`` (an element of H_N e)."""
    from .cherednik import symmetrizer

    n = _nvars(p)
    terms = {}
    ident = tuple(range(n))
    for ex, c in p.terms.items():
        terms[(ex[n:], ident, ex[:n])] = c
    return HElement(n, terms) * symmetrizer(n)


def intertwining_check(samples, n=None, dunkl=dunkl_apply):
    """``(pr iota^-1)(y_i h) == K_i (pr iota^-1)(h)`` for ``h = he_lift(p)``."""
    if not samples:
        return True, None
    n = n or _nvars(samples[0])
    for p in samples:
        h = he_lift(p)
        if pr_iota_inv(h) != p:
            return False, {"identity": "pr iota^-1 lift", "sample": repr(p)}
        for i in range(1, n + 1):
            if pr_iota_inv(HElement.y(n, i) * h) != dunkl(i, p):
                return False, {"identity": f"(pr iota^-1) y{i} = K{i} (pr iota^-1)", "sample": repr(p)}
    return True, None
