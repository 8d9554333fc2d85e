import random
from fractions import Fraction

from bethe_cherednik.calogero import char_poly
from bethe_cherednik.multisym import (
    logdet_expansion,
    multisym_coeffs,
    power_sum,
    power_sums_in_p,
    substitute_p,
    universal_multisym,
)
from bethe_cherednik.poly import MultiPoly, zl_vars
from bethe_cherednik.polyrep import dunkl_apply, he_lift, intertwining_check, polyrep_check
from bethe_cherednik.randomgen import random_zl_poly
from bethe_cherednik.series import expand_rational
from bethe_cherednik.symgroup import is_multisymmetric

VS = zl_vars(2)
z1, z2, l1, l2 = (MultiPoly.var(VS, k) for k in VS)


def test_n1_universal_multisym():
    vs = zl_vars(1)
    p = universal_multisym(1)
    z, lam = MultiPoly.var(vs, "z1"), MultiPoly.var(vs, "l1")
    # (u - z)(v - l) - 1
    assert p.coeff(1, 1) == 1
    assert p.coeff(1, 0) == -lam
    assert p.coeff(0, 1) == -z
    assert p.coeff(0, 0) == z * lam - 1


def test_coefficients_are_multisymmetric():
    for n in (2, 3):
        table = multisym_coeffs(n)
        assert table[0][0] == 1
        for row in table:
            for c in row:
                assert is_multisymmetric(c if isinstance(c, MultiPoly) else MultiPoly.const(zl_vars(n), c))


def test_power_sum_examples():
    assert power_sum(0, 0, 3) == 3
    assert power_sum(1, 1, 2) == l1 * z1 + l2 * z2
    assert power_sum(2, 0, 2) == l1**2 + l2**2


def test_logdet_low_orders():
    s = logdet_expansion(2, 3)
    assert s[1, 1] == -2
    assert s[2, 1] == -power_sum(0, 1, 2)


def test_logdet_exp_matches_diagonal_determinant():
    # at diagonal Z, L the determinant factorizes; compare term by term
    for n in (2, 3):
        rng = random.Random(n)
        z0 = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
        l0 = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
        order = 4
        log = logdet_expansion(n, order).map(lambda c: c.evaluate(z0 + l0) if isinstance(c, MultiPoly) else c)
        direct = None
        for z, lam in zip(z0, l0):
            # (u - z)(v - l) - 1 over (u - z)(v - l)
            num = {(1, 1): 1, (1, 0): -lam, (0, 1): -z, (0, 0): z * lam - 1}
            factor = expand_rational(num, char_poly([[z]]), char_poly([[lam]]), order)
            direct = factor if direct is None else direct * factor
        assert log.exp() == direct


def test_power_sums_recovered():
    for n in (2, 3):
        for (k, l), expr in power_sums_in_p(n, 3).items():
            assert substitute_p(expr, n) == power_sum(k, l, n)


def test_dunkl_examples():
    one = MultiPoly.const(VS, 1)
    assert dunkl_apply(1, one) == z1
    assert dunkl_apply(1, z1) == z1**2
    assert dunkl_apply(1, l1) == z1 * l1 + 1


def test_polyrep_relations_hold():
    rng = random.Random(11)
    for n in (2, 3):
        samples = [random_zl_poly(rng, n) for _ in range(10)]
        ok, info = polyrep_check(samples, n)
        assert ok, info
        ok, info = intertwining_check(samples, n)
        assert ok, info


def test_perturbed_dunkl_fails():
    def broken(i, p):
        res = dunkl_apply(i, p)
        return res - MultiPoly.var(VS, "z1") * p if i == 1 else res

    samples = [l1 * z2 + 1, z1**2 * l2]
    ok, info = polyrep_check(samples, 2, broken)
    assert not ok


def test_lift_projects_back():
    p = l1 * z2**2 - 3 * l2
    assert he_lift(p).n == 2
    ok, _ = intertwining_check([p], 2)
    assert ok
