from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bethe_cherednik.poly import MultiPoly
from bethe_cherednik.series import BiPoly, TruncSeries, expand_rational, series_invert
from bethe_cherednik.upoly import RatFunc, UPoly

small = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


def test_invert_one():
    assert series_invert(TruncSeries.one(5)) == TruncSeries.one(5)


def test_invert_geometric():
    s = TruncSeries(5, {(0, 0): 1, (1, 1): -1})
    inv = series_invert(s)
    assert inv == TruncSeries(5, {(k, k): 1 for k in range(6)})


def test_invert_round_trip():
    s = TruncSeries(6, {(0, 0): 1, (1, 0): 1})
    assert s * series_invert(s) == TruncSeries.one(6)


def test_invert_needs_unit_constant():
    with pytest.raises(ValueError):
        series_invert(TruncSeries(3, {(0, 0): 2}))


def test_expand_simple_pole():
    a = Fraction(3, 2)
    # 1/(u - a) as numer u^0 v^1 over (u - a) v
    got = expand_rational({(0, 1): 1}, UPoly.linear(a), UPoly([0, 1]), 6)
    assert got == TruncSeries(6, {(k + 1, 0): a**k for k in range(6)})


def test_expand_numerator_equals_denominator():
    du, dv = UPoly.from_roots([1, 2]), UPoly.from_roots([Fraction(1, 3)])
    numer = {}
    for i, a in enumerate(du.c):
        for j, b in enumerate(dv.c):
            if a * b:
                numer[i, j] = a * b
    assert expand_rational(numer, du, dv, 5) == TruncSeries.one(5)


@given(small, small)
@settings(max_examples=30, deadline=None)
def test_expand_rank_one_tail(z, lam):
    vs = ("u", "v")
    u, v = MultiPoly.var(vs, "u"), MultiPoly.var(vs, "v")
    numer = (u - z) * (v - lam) - 1
    got = expand_rational(numer, UPoly.linear(z), UPoly.linear(lam), 5)
    want = {(0, 0): 1}
    for i in range(5):
        for j in range(5):
            want[i + 1, j + 1] = -(z**i) * lam**j
    assert got == TruncSeries(5, want)


@given(st.lists(small, min_size=1, max_size=4))
@settings(max_examples=30, deadline=None)
def test_log_exp_inverse(cs):
    s = TruncSeries(4, {(k + 1, 1): c for k, c in enumerate(cs)})
    s = s + TruncSeries.one(4)
    assert s.log().exp() == s


def test_truncate_is_prefix():
    s = TruncSeries(6, {(i, j): Fraction(i - j, 1 + i) for i in range(7) for j in range(7)})
    t = s.truncate(3).table()
    assert t == [row[:4] for row in s.table()[:4]]


def test_json_round_trip():
    s = TruncSeries(3, {(1, 2): Fraction(-2, 7), (0, 0): 1})
    assert TruncSeries.from_json(s.to_json()) == s


def test_bipoly_arithmetic():
    a = BiPoly({(1, 0): 1, (0, 0): -2})
    b = BiPoly({(0, 1): 3})
    assert (a * b).terms == {(1, 1): 3, (0, 1): -6}
    assert (a + 2).terms == {(1, 0): 1}
    assert a.degree_u() == 1 and b.degree_v() == 1


def test_upoly_division():
    f = UPoly.from_roots([1, 2, 3])
    q, r = f.divmod(UPoly.linear(2))
    assert not r and q == UPoly.from_roots([1, 3])
    assert f.gcd(UPoly.from_roots([3, 5])) == UPoly.linear(3)


def test_ratfunc_reduces():
    f = RatFunc(UPoly.from_roots([1, 2]), UPoly.from_roots([2, 5]))
    assert f.den == UPoly.linear(5)
    assert (f - f).is_zero()
    assert RatFunc.pole(0).derivative() == RatFunc(UPoly([-1]), UPoly([0, 0, 1]))


@given(st.lists(small, min_size=1, max_size=4), st.lists(small, min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_upoly_divmod_identity(a, b):
    f, g = UPoly(a), UPoly(b)
    if not g:
        return
    q, r = f.divmod(g)
    assert q * g + r == f
    assert not r or r.degree() < g.degree()
