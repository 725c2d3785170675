import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from elseries import series as S
from elseries.errors import NotPurelyInfinite
from elseries.expr import evaluate
from elseries.monomials import (
    ONE,
    X,
    ExpOf,
    Word,
    cmp_monomial,
    depth_word,
    exp_monomial,
    height,
    log_image,
    mul_monomial,
    normalize_monomial,
    power_monomial,
    sign_vs_one,
)

from gen import rand_monomial, rand_word, using
from oracles import dense_word_cmp

LOG = depth_word(1)


def e(text):
    return exp_monomial(evaluate(text))


def test_word_product():
    assert X * X == Word({0: 2})


def test_exp_product():
    assert e("x") * e("x^2") == e("x^2 + x")


def test_exp_inverse():
    assert mul_monomial(e("x"), e("-x")) == ONE


def test_x_above_log():
    assert cmp_monomial(X, LOG) == 1


def test_exp_order_follows_argument():
    assert e("x^2") > e("x")


def test_exp_beats_power():
    # l(x^5) = 5 log x, and x > 5 log x
    assert S.cmp(evaluate("x"), S.Series([(LOG, 5)])) == 1
    assert cmp_monomial(e("x"), Word({0: 5})) == 1


def test_normalize_folds_log_image():
    assert normalize_monomial(ExpOf(evaluate("2*log(x)"))) == Word({0: 2})
    assert log_image(Word({0: 2})) == evaluate("2*log(x)")


def test_normalize_keeps_genuine_exp():
    m = normalize_monomial(ExpOf(evaluate("x")))
    assert isinstance(m, ExpOf) and m.arg == evaluate("x")


def test_normalize_rejects_constant_term():
    with pytest.raises(NotPurelyInfinite):
        normalize_monomial(ExpOf(evaluate("log(x) + 1")))


def test_normalize_rejects_infinitesimal_term():
    with pytest.raises(NotPurelyInfinite):
        exp_monomial(evaluate("x + 1/x"))


@pytest.mark.parametrize("text,h", [("x", 0), ("exp(x^2)", 1), ("exp(exp(x) + x)", 2), ("log(x)^3", 0)])
def test_height(text, h):
    (m, _), = evaluate(text).terms
    assert height(m) == h


def test_partially_foldable_argument_stays_exp():
    # e(x + log x) = x * e(x): the product must be one canonical monomial
    assert e("x + log(x)") == mul_monomial(X, e("x"))
    assert isinstance(e("x + log(x)"), ExpOf)


def test_negative_depth_words_are_ordered():
    # log_{-1} x plays the role of exp x in a pure word group
    assert Word({-1: 1}) > X


@given(using(rand_word), using(rand_word))
def test_word_order_matches_dense_oracle(a, b):
    assert cmp_monomial(a, b) == dense_word_cmp(a, b)


@given(using(rand_monomial), using(rand_monomial))
def test_order_is_antisymmetric(a, b):
    assert cmp_monomial(a, b) == -cmp_monomial(b, a)
    assert (cmp_monomial(a, b) == 0) == (a == b)


@settings(max_examples=60)
@given(using(rand_monomial), using(rand_monomial), using(rand_monomial))
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * a.inverse() == ONE
    assert a * ONE == a


@settings(max_examples=60)
@given(using(rand_monomial), using(rand_monomial), using(rand_monomial))
def test_order_is_compatible_with_product(a, b, c):
    assert cmp_monomial(a * c, b * c) == cmp_monomial(a, b)


@given(using(rand_monomial), using(rand_monomial))
def test_log_image_is_additive(a, b):
    assert log_image(a * b) == log_image(a) + log_image(b)


@given(using(rand_monomial))
def test_sign_vs_one_reads_log_image(m):
    assert sign_vs_one(m) == S.sign(log_image(m))


@given(using(rand_monomial))
def test_rational_powers(m):
    assert power_monomial(m, F(1, 2)) ** 2 == m
    assert power_monomial(m, -1) == m.inverse()


def test_transitivity_on_random_triples():
    rng = random.Random(11)
    for _ in range(300):
        a, b, c = sorted((rand_monomial(rng) for _ in range(3)), key=lambda m: m)
        assert a <= b <= c and a <= c
