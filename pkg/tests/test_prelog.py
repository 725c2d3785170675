import pytest
from hypothesis import given

from elseries import series as S
from elseries.errors import LogOutsideDomain, NotInfinite
from elseries.expr import evaluate
from elseries.monomials import ONE, X, Word, depth_word, exp_monomial, mul_monomial
from elseries.prelog import BASIC, LOGWORDS, SIGMA, PrelogSection, ga_check, prelog_L, section_apply

from gen import rand_infinite_monomial, rand_word, using


def test_logwords_section():
    g = Word({0: 2, 1: 3})
    assert section_apply(LOGWORDS, g) == S.Series([(depth_word(1), 2), (depth_word(2), 3)])


def test_sigma_shifts_depth():
    assert SIGMA(X) == S.monomial(depth_word(1))


def test_exp_section_returns_argument():
    alpha = evaluate("x^2 + x")
    assert section_apply(BASIC, exp_monomial(alpha)) == alpha
    assert section_apply(LOGWORDS, exp_monomial(alpha)) == alpha


def test_basic_is_identity_on_words():
    assert BASIC(Word({0: 2, 3: -1})) == S.Series([(X, 2), (depth_word(3), -1)])


@given(using(rand_word))
def test_sigma_agrees_with_logwords(g):
    assert SIGMA(g) == LOGWORDS(g)


@given(using(rand_word), using(rand_word))
def test_sections_are_additive(a, b):
    for l in (BASIC, SIGMA, LOGWORDS, PrelogSection("sigma", 2)):
        assert l(a * b) == l(a) + l(b)


def test_sigma_shift_must_decrease():
    with pytest.raises(ValueError):
        PrelogSection("sigma", 0)


def test_unknown_section():
    with pytest.raises(ValueError):
        PrelogSection.named("nope")


def test_prelog_example():
    s = prelog_L(evaluate("x^2 + x"), LOGWORDS, 2)
    assert s.terms == evaluate("2*log(x) + 1/x - 1/2*x^-2").terms
    assert s.trunc.cutoff == Word({0: -3})


def test_prelog_of_exp_is_exact():
    assert prelog_L(S.monomial(exp_monomial(evaluate("x"))), LOGWORDS, 4) == evaluate("x")


def test_prelog_needs_coefficient_log():
    with pytest.raises(LogOutsideDomain):
        prelog_L(evaluate("2*x"))


def test_basic_fails_growth_axiom():
    assert ga_check(BASIC, X) is False


@pytest.mark.parametrize("g", [X, depth_word(1), depth_word(3), Word({0: 1, 2: -5})])
def test_basic_fails_on_every_word(g):
    assert not ga_check(BASIC, g)


def test_sigma_satisfies_growth_axiom():
    assert ga_check(SIGMA, X)
    assert ga_check(PrelogSection("sigma", 3), depth_word(2))


@pytest.mark.parametrize("k", ["1/3", "1", "2", "7/2"])
def test_logwords_power_of_x(k):
    assert ga_check(LOGWORDS, Word({0: evaluate(k).terms[0][1]}))


@given(using(rand_infinite_monomial))
def test_growth_axiom_random(g):
    assert ga_check(LOGWORDS, g)
    assert ga_check(SIGMA, g)


def test_growth_axiom_needs_infinite():
    with pytest.raises(NotInfinite):
        ga_check(LOGWORDS, ONE)


def test_product_in_tower():
    # l(e(x^2) * x) = x^2 + log x
    g = mul_monomial(exp_monomial(evaluate("x^2")), X)
    assert LOGWORDS(g) == evaluate("x^2 + log(x)")
