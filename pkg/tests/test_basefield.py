import random
from fractions import Fraction

import pytest

from keyval.basefield import BaseFieldConfig, KElem, YPoly, base_valuation
from keyval.errors import DivisorZeroError, KeyvalError
from keyval.values import INF

F = Fraction
FF = BaseFieldConfig.function_field()
P3 = BaseFieldConfig.p_adic(3)


def test_config_rejects_bad_kind():
    with pytest.raises(KeyvalError):
        BaseFieldConfig("padic")


def test_config_rejects_composite_p():
    with pytest.raises(KeyvalError):
        BaseFieldConfig.p_adic(9)
    with pytest.raises(KeyvalError):
        BaseFieldConfig.p_adic(1)


def test_ypoly_normalizes_trailing_zeros():
    assert YPoly((1, 2, 0, 0)) == YPoly((1, 2))
    assert YPoly((0, 0)).is_zero()


def test_ypoly_arithmetic():
    y = YPoly.gen()
    assert y * (y + YPoly.one()) == YPoly((0, 1, 1))
    assert (y + YPoly.one()) - y == YPoly.one()
    assert y * 0 == YPoly.zero()


def test_ypoly_divmod_round_trip():
    rng = random.Random(7)
    for _ in range(50):
        f = YPoly([F(rng.randint(-5, 5)) for _ in range(rng.randint(0, 6))])
        g = YPoly([F(rng.randint(-5, 5)) for _ in range(rng.randint(1, 4))])
        if g.is_zero():
            continue
        q, r = f.divmod(g)
        assert q * g + r == f
        assert r.degree < g.degree


def test_ypoly_divmod_by_zero():
    with pytest.raises(DivisorZeroError):
        YPoly.one().divmod(YPoly.zero())


def test_ypoly_order():
    assert YPoly((0, 0, 1, 1)).order() == 2
    assert YPoly.zero().order() is None


def test_kelem_reduces_to_lowest_terms():
    y = YPoly.gen()
    a = KElem(y * y, y * (y + YPoly.one()))
    assert a.num == y
    assert a.den == y + YPoly.one()


def test_kelem_monic_denominator():
    a = KElem(YPoly.one(), YPoly((0, 2)))
    assert a.den.leading == 1
    assert a.num == YPoly.const(F(1, 2))


def test_kelem_zero_denominator():
    with pytest.raises(DivisorZeroError):
        KElem(YPoly.one(), YPoly.zero())
    with pytest.raises(DivisorZeroError):
        KElem.one() / KElem.zero()


def test_kelem_field_axioms_sample():
    rng = random.Random(11)

    def rand():
        num = YPoly([F(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))])
        den = YPoly([F(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))])
        if den.is_zero():
            den = YPoly.one()
        return KElem(num, den)

    for _ in range(30):
        a, b, c = rand(), rand(), rand()
        assert (a + b) * c == a * c + b * c
        assert a - a == KElem.zero()
        if not a.is_zero():
            assert a / a == KElem.one()


def test_kelem_mul_div_examples():
    y = KElem.gen()
    one = KElem.one()
    assert y * (y + one) == KElem(YPoly((0, 1, 1)))
    assert (y * y) / (y * y * y) == one / y


def test_padic_constant_arithmetic():
    a = KElem.const(F(1, 2)) + KElem.const(F(1, 3))
    assert a.as_fraction() == F(5, 6)


def test_base_valuation_function_field():
    y = KElem.gen()
    assert base_valuation(y * y + y * y * y, FF) == 2
    assert base_valuation((KElem.one() + y) / (y * y), FF) == -2
    assert base_valuation(KElem.zero(), FF) is INF


def test_base_valuation_padic():
    assert base_valuation(KElem.const(F(18, 5)), P3) == 2
    assert base_valuation(KElem.const(F(1, 3)), P3) == -1
    assert base_valuation(KElem.zero(), P3) is INF


def test_valuation_axioms_property():
    rng = random.Random(5)
    elems = []
    for _ in range(20):
        num = YPoly([F(rng.randint(-4, 4)) for _ in range(rng.randint(1, 4))])
        den = YPoly([F(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))])
        if den.is_zero():
            den = YPoly.one()
        elems.append(KElem(num, den))
    for a in elems:
        for b in elems:
            va, vb = base_valuation(a, FF), base_valuation(b, FF)
            assert base_valuation(a * b, FF) == va + vb
            assert base_valuation(a + b, FF) >= min(va, vb)
