from fractions import Fraction

import pytest

from keyval import (
    AdicExpansion,
    FormalExpansion,
    adic_expand,
    expansion_eval,
    formal_weight,
    lower_expansion,
    raise_expansion,
    weight,
)
from keyval.basefield import BaseFieldConfig
from keyval.errors import FuelExhaustedError, LevelOutOfRangeError
from keyval.izumi import CorpusConfig, random_corpus_poly
from keyval.parsing import parse_kelem, parse_poly
from keyval.values import INF

F = Fraction
FF = BaseFieldConfig.function_field()


def p(text):
    return parse_poly(text, FF)


def k(text):
    return parse_kelem(text, FF)


def test_formal_weight_examples(b1):
    E = FormalExpansion(1, {(3,): k("1"), (1,): k("y")})
    assert formal_weight(E, b1) == F(3, 2)
    assert formal_weight(FormalExpansion(2, {}), b1) is INF
    assert formal_weight(FormalExpansion(2, {(0, 1): k("1")}), b1) == F(3, 2)


def test_formal_weight_level_check(b1):
    with pytest.raises(LevelOutOfRangeError):
        formal_weight(FormalExpansion(3, {}), b1)


def test_raise_power_example(b1):
    E = adic_expand(p("x^4"), 1, b1)
    out, trace = raise_expansion(E, b1)
    assert out.terms == {(0, 2): k("1"), (0, 1): k("2*y"), (0, 0): k("y^2")}
    assert trace.weights == [F(2), F(2), F(2)]


def test_raise_constant_is_identity(b1):
    E = adic_expand(p("y^3"), 1, b1)
    out, trace = raise_expansion(E, b1)
    assert out.terms == {(0, 0): k("y^3")}
    assert trace.weights == [F(3)]


def test_raise_no_rewrite_needed(b1):
    E = adic_expand(p("x"), 1, b1)
    out, trace = raise_expansion(E, b1)
    assert out.terms == {(1, 0): k("1")}
    assert trace.weights == [F(1, 2)]


def test_raise_at_top_level_rejected(b1):
    with pytest.raises(LevelOutOfRangeError):
        raise_expansion(adic_expand(p("x"), 2, b1), b1)


def test_lower_example(b1):
    E = AdicExpansion(2, {(1, 1): k("1"), (1, 0): k("2*y")})
    out, trace = lower_expansion(E, b1)
    assert out.terms == {(3,): k("1"), (1,): k("y")}
    assert trace.weights == [F(3, 2), F(3, 2)]


def test_lower_level_bounds(b1):
    with pytest.raises(LevelOutOfRangeError):
        lower_expansion(adic_expand(p("x"), 1, b1), b1)


def test_round_trip_small(b1, b2):
    corpus = CorpusConfig(seed=23, samples=40, max_degree=6, positive_only=False)
    for basis in (b1, b2):
        for j in range(corpus.samples):
            f = random_corpus_poly(FF, corpus, j)
            for i in range(1, basis.alpha):
                low = adic_expand(f, i, basis)
                high = adic_expand(f, i + 1, basis)
                up, _ = raise_expansion(low, basis)
                assert up == high
                down, _ = lower_expansion(high, basis)
                assert down == low


def test_traces_monotone_and_land_on_weight(b1, b2):
    corpus = CorpusConfig(seed=29, samples=30, max_degree=6, positive_only=False)
    for basis in (b1, b2):
        for j in range(corpus.samples):
            f = random_corpus_poly(FF, corpus, j)
            for i in range(1, basis.alpha):
                _, tr_up = raise_expansion(adic_expand(f, i, basis), basis)
                _, tr_dn = lower_expansion(adic_expand(f, i + 1, basis), basis)
                for tr, lvl in ((tr_up, i + 1), (tr_dn, i)):
                    ws = tr.weights
                    assert all(a <= b for a, b in zip(ws, ws[1:]))
                    assert ws[-1] == weight(f, lvl, basis)


def test_rewrite_preserves_polynomial(b2):
    f = p("x^7 - y*x^3 + y^2")
    up, _ = raise_expansion(adic_expand(f, 2, b2), b2)
    assert expansion_eval(up, b2) == f
    down, _ = lower_expansion(adic_expand(f, 3, b2), b2)
    assert expansion_eval(down, b2) == f


def test_fuel_exhaustion(b1):
    E = adic_expand(p("x^9"), 1, b1)
    with pytest.raises(FuelExhaustedError):
        raise_expansion(E, b1, fuel=0)
