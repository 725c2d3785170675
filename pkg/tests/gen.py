"""Random monomials and series for property tests.

Everything is driven by an explicit ``random.Random`` so the acceptance suite
can draw reproducible samples; ``hypothesis`` tests feed in ``st.randoms()``.
"""

from fractions import Fraction as F

from hypothesis import strategies as st

from elseries import series as S
from elseries.monomials import ONE, Word, exp_monomial, height, sign_vs_one

EXPONENTS = [F(-2), F(-1), F(-1, 2), F(1, 3), F(1, 2), F(1), F(2), F(3)]
COEFFS = [F(-3), F(-2), F(-1), F(-1, 2), F(1, 3), F(1, 2), F(1), F(2), F(5)]


def rand_coeff(rng):
    return rng.choice(COEFFS)


def rand_word(rng, max_depth=3, max_factors=3):
    k = rng.randint(0, max_factors)
    return Word({rng.randint(0, max_depth): rng.choice(EXPONENTS) for _ in range(k)})


def rand_monomial(rng, max_height=2):
    h = rng.randint(0, max_height)
    if h == 0:
        return rand_word(rng)
    alpha = rand_purely_infinite(rng, h - 1, max_terms=3)
    if alpha.is_zero():
        return rand_word(rng)
    return exp_monomial(alpha)


def rand_infinite_monomial(rng, max_height=2):
    """A monomial > 1."""
    while True:
        m = rand_monomial(rng, max_height)
        s = sign_vs_one(m)
        if s:
            return m if s > 0 else m.inverse()


def rand_purely_infinite(rng, max_height=1, max_terms=3, min_terms=1):
    n = rng.randint(min_terms, max_terms)
    return S.Series((rand_infinite_monomial(rng, max_height), rand_coeff(rng)) for _ in range(n))


def rand_series(rng, max_height=2, max_terms=6, min_terms=0):
    n = rng.randint(min_terms, max_terms)
    return S.Series((rand_monomial(rng, max_height), rand_coeff(rng)) for _ in range(n))


def rand_infinitesimal(rng, max_height=1, max_terms=3, min_terms=1):
    n = rng.randint(min_terms, max_terms)
    return S.Series((rand_infinite_monomial(rng, max_height).inverse(), rand_coeff(rng)) for _ in range(n))


def rand_zero_constant(rng, max_height=1, max_terms=4):
    """Series with zero constant part (so Exp needs no coefficient exp)."""
    s = rand_series(rng, max_height, max_terms)
    return S.Series((m, c) for m, c in s.terms if m != ONE)


def rand_unit_lead(rng, max_height=1, max_terms=4):
    """Positive series with leading coefficient 1 (so Log needs only log 1)."""
    while True:
        s = rand_series(rng, max_height, max_terms, min_terms=1)
        if s.terms:
            return s.scale(1 / s.terms[0][1])


def rand_le_monomial(rng, m, n, max_terms=2):
    """A member of ``G_m^n`` built from the recursive definition."""
    if n == 0:
        return Word({m: rng.choice(EXPONENTS)})
    w = rand_le_monomial(rng, m, n - 1, max_terms)
    f = rand_le_series(rng, m, n - 1, max_terms, infinite=True)
    return w * exp_monomial(f) if not f.is_zero() else w


def rand_le_series(rng, m, n, max_terms=2, infinite=False):
    """Exact series supported in ``G_m^n``; ``infinite`` keeps only monomials > 1."""
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        mono = rand_le_monomial(rng, m, n, max_terms)
        if mono == ONE or (infinite and sign_vs_one(mono) < 0):
            mono = mono.inverse()
        if mono != ONE:
            terms.append((mono, rand_coeff(rng)))
    return S.Series(terms)


def series_height(s):
    return max((height(m) for m in s.support()), default=0)


def using(fn, *args, **kwargs):
    """Hypothesis strategy drawing ``fn(rng, *args, **kwargs)``."""
    return st.randoms(use_true_random=False).map(lambda rng: fn(rng, *args, **kwargs))
