from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bethe_cherednik.cherednik import FreeWord
from bethe_cherednik.linalg import det_exact, identity_matrix, inverse, matmul, rank, rdet, solve_exact
from bethe_cherednik.poly import MultiPoly, zl_vars
from bethe_cherednik.symgroup import (
    Perm,
    act,
    all_perms,
    compose,
    inverse as perm_inverse,
    is_multisymmetric,
    perm_sign,
    permute_exponents,
    transposition,
)

entries = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))


def leibniz(m):
    n = len(m)
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(perm_sign(p))
        for r in range(n):
            term *= m[r][p[r]]
        total += term
    return total


def test_det_examples():
    assert det_exact(identity_matrix(3)) == 1
    assert det_exact([[2, 0], [0, 5]]) == 10
    assert det_exact([[0, 1], [1, 0]]) == -1


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=40, deadline=None)
def test_det_matches_leibniz(m):
    assert det_exact(m) == leibniz(m)


@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=30, deadline=None)
def test_rdet_commutative_is_det(m):
    assert rdet(m) == det_exact(m)


def test_rdet_keeps_factor_order():
    a, b, c, d = FreeWord.letter("x", 0), FreeWord.letter("y", 0), FreeWord.letter("x", 1), FreeWord.letter("y", 1)
    got = rdet([[a, b], [c, d]])
    assert got == a * d - b * c
    assert got != d * a - c * b


def test_rdet_one_by_one():
    x = FreeWord.letter("x", 0)
    assert rdet([[x]]) == x


def test_rank_and_inverse():
    m = [[1, 2], [2, 4]]
    assert rank(m) == 1
    g = [[Fraction(2), 1], [1, 1]]
    assert matmul(g, inverse(g)) == identity_matrix(2)
    with pytest.raises(ZeroDivisionError):
        inverse(m)


def test_solve_exact():
    x, unique = solve_exact([[1, 1], [1, -1]], [3, 1])
    assert unique and x == [2, 1]
    with pytest.raises(ArithmeticError):
        solve_exact([[1, 1], [1, 1]], [1, 2])


VS = zl_vars(2)
z1, z2, l1, l2 = (MultiPoly.var(VS, name) for name in VS)


def test_act_modes():
    s = transposition(2, 0, 1)
    assert act(s, z1 * l1, "z") == z2 * l1
    assert act(s, z1 * l1, "l") == z1 * l2
    assert act(s, z1 * l1) == z2 * l2
    p = z1**2 * l2 + 3 * z2
    assert act((0, 1), p) == p


def test_group_action_laws():
    vs = zl_vars(3)
    p = MultiPoly.var(vs, "z1") * MultiPoly.var(vs, "l2") ** 2 + MultiPoly.var(vs, "z3")
    for a in all_perms(3):
        assert act(perm_inverse(a), act(a, p)) == p
        for b in all_perms(3):
            assert act(compose(a, b), p) == act(a, act(b, p))


def test_permute_exponents_matches_act():
    vs = zl_vars(3)
    e = (2, 0, 1)
    for a in all_perms(3):
        p = MultiPoly.monomial(vs, e + (0, 0, 0))
        assert act(a, p, "z") == MultiPoly.monomial(vs, permute_exponents(a, e) + (0, 0, 0))


def test_multisymmetric():
    assert is_multisymmetric(z1 * l1 + z2 * l2)
    assert not is_multisymmetric(z1)
    assert is_multisymmetric((z1 + z2) * (l1 + l2))
    assert not is_multisymmetric(z1 * l2 + z2 * l2)


def test_perm_class():
    p = Perm.from_oneline([2, 3, 1])
    assert p.oneline() == [2, 3, 1]
    assert p(1) == 2
    assert (p * p.inverse()) == Perm.identity(3)
    assert perm_sign(Perm.transposition(3, 1, 2).img) == -1
