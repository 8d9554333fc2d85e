import random
from fractions import Fraction

import pytest

from bethe_cherednik.oracle import n2_display_operator, oracle_agreement, rdet_oracle
from bethe_cherednik.randomgen import distinct_rationals, small_rationals
from bethe_cherednik.upoly import RatFunc, UPoly


def test_n1_operator():
    z, lam = Fraction(2), Fraction(3)
    op = rdet_oracle([z], [lam])
    assert op.is_monic()
    assert op.coeffs[0][0][0] == RatFunc(-lam) - RatFunc.pole(z)


def test_distinct_points_required():
    with pytest.raises(ValueError):
        rdet_oracle([1, 1], [0, 0])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_agreement_with_closed_form(n):
    rng = random.Random(100 + n)
    for _ in range(4):
        z0, l0 = distinct_rationals(rng, n), small_rationals(rng, n)
        ok, info = oracle_agreement(z0, l0)
        assert ok, info
        assert not info["poles"]


def test_disagreement_is_detected():
    z0, l0 = [Fraction(1, 2), 3], [1, 2]
    op = rdet_oracle(z0, l0)
    op.coeffs[1][0][0] = op.coeffs[1][0][0] + RatFunc(UPoly([1]))
    ok, info = oracle_agreement(z0, l0, op)
    assert not ok and info["mismatches"]


def test_n2_display_operator_matches():
    rng = random.Random(5)
    for _ in range(3):
        z0, l0 = distinct_rationals(rng, 2), small_rationals(rng, 2)
        a, b = rdet_oracle(z0, l0), n2_display_operator(z0, l0)
        assert a.coeffs == b.coeffs


def test_json_shape():
    data = rdet_oracle([0, 1], [0, 0]).to_json()
    assert data["order"] == 2
    assert data["basis"] == [[1, 2], [2, 1]]
    assert len(data["coeffs"]) == 3
