"""Log-substitution and exp-substitution, and the LE hierarchy built from them.

``psi_apply`` substitutes ``log x`` for ``x`` (depths shift by one, extended
through ``e(.)``); ``phi_apply`` is its inverse, substituting ``exp x``.  The
groups ``G_m^n`` start from ``G_m^0 = {(log_m x)^k}`` and grow by
exponentials of series supported in ``G_m^n`` above ``G_m^{n-1}``.
"""

from __future__ import annotations

import functools
from typing import Callable, Iterable, NamedTuple, Optional

from . import series as S
from .elfield import DEFAULT_MAX_N, level
from .errors import NotInfinite, PreconditionError
from .monomials import (
    ONE,
    ExpOf,
    Monomial,
    Word,
    cmp_monomial,
    depth_word,
    exp_monomial,
    is_infinite,
    log_image,
    mul_monomial,
    sign_vs_one,
)
from .prelog import LOGWORDS, PrelogSection, section_apply
from .series import Series, TruncationMark


def _map_terms(s: Series, f: Callable[[Monomial], Monomial]) -> Series:
    # f is an order-preserving group automorphism, so order and marks carry over
    terms = tuple((f(m), c) for m, c in s.terms)
    trunc = s.trunc
    if trunc is not None:
        trunc = TruncationMark(f(trunc.cutoff), trunc.order_used)
    return Series._raw(terms, trunc)


@functools.lru_cache(maxsize=1 << 14)
def psi_monomial(m: Monomial) -> Monomial:
    if isinstance(m, Word):
        return Word._raw(tuple((k + 1, r) for k, r in m.exponents))
    return exp_monomial(psi_apply(m.arg))


@functools.lru_cache(maxsize=1 << 14)
def phi_monomial(m: Monomial) -> Monomial:
    if isinstance(m, ExpOf):
        return exp_monomial(phi_apply(m.arg))
    r0 = m.exponent(0)
    if any(k < 0 for k in m.depths):
        raise ValueError("exp-substitution is defined on depths >= 0 only")
    rest = Word._raw(tuple((k - 1, r) for k, r in m.exponents if k > 0))
    if not r0:
        return rest
    # Phi(x^r0) = e(r0 * x)
    return mul_monomial(exp_monomial(S.monomial(Word({0: 1}), r0)), rest)


def psi_apply(s: Series) -> Series:
    """Substitute ``log x`` for ``x``."""
    return _map_terms(s, psi_monomial)


def phi_apply(s: Series) -> Series:
    """Substitute ``exp x`` for ``x`` (inverse of :func:`psi_apply`)."""
    return _map_terms(s, phi_monomial)


def contraction_check(g: Monomial) -> bool:
    if not is_infinite(g):
        raise NotInfinite("contraction is checked on monomials > 1, got %s" % g)
    return cmp_monomial(psi_monomial(g), g) < 0


def comp_h_check(
    gens: Iterable[Monomial],
    section: PrelogSection = LOGWORDS,
    psi: Callable[[Series], Series] = psi_apply,
) -> bool:
    """Check that ``psi`` and the section agree on generators whose log-image is a monomial."""
    for h in gens:
        image = section_apply(section, h)
        if len(image.terms) == 1 and image.terms[0][1] == 1:
            if psi(S.monomial(h)) != image:
                return False
    return True


# -- the G_m^n hierarchy -------------------------------------------------------


class LEIndex(NamedTuple):
    m: int
    n: int


class LEDecomposition(NamedTuple):
    """``mono = w * e(f)`` with ``w`` in ``G_m^{n-1}`` and ``f`` the top part."""

    w: Monomial
    f: Series


def _in_base(mono: Monomial, m: int) -> bool:
    return isinstance(mono, Word) and all(k == m for k in mono.depths)


@functools.lru_cache(maxsize=1 << 16)
def in_le_group(mono: Monomial, m: int, n: int) -> bool:
    """Membership of ``mono`` in ``G_m^n`` (``n = -1`` is the trivial group)."""
    if n < 0:
        return mono == ONE
    if n == 0:
        return _in_base(mono, m)
    return le_decompose(mono, m, n) is not None


def _is_top(mu: Monomial, m: int, n: int) -> bool:
    """``mu`` in ``G_m^n`` and above all of ``G_m^{n-1}``."""
    # G_m^{n-1} is convex in G_m^n, so "above it" means "> 1 and outside it"
    return sign_vs_one(mu) > 0 and in_le_group(mu, m, n) and not in_le_group(mu, m, n - 1)


def le_decompose(mono: Monomial, m: int, n: int) -> Optional[LEDecomposition]:
    """Split ``mono`` in ``G_m^n`` (``n >= 1``) as ``w * e(f)``, or None if not a member.

    The exponent ``f`` collects the terms of the log-image supported in
    ``[G_m^{n-1}]^{>G_m^{n-2}}``; the growth axiom forces the rest to be the
    log-image of ``w``.
    """
    if n < 1:
        raise ValueError("decomposition needs n >= 1")
    beta = log_image(mono)
    top, rest = [], []
    for mu, c in beta.terms:
        (top if _is_top(mu, m, n - 1) else rest).append((mu, c))
    rest_s = Series._raw(tuple(rest), None)
    if not S.is_purely_infinite(rest_s):
        return None
    w = exp_monomial(rest_s)
    if not in_le_group(w, m, n - 1):
        return None
    return LEDecomposition(w, Series._raw(tuple(top), None))


def le_classify(mono: Monomial, max_depth: int = 4) -> Optional[LEIndex]:
    """Smallest ``(m, n)`` with ``mono`` in ``G_m^n``: least ``n`` first, then ``m``.

    Returns None when no index up to ``max_depth`` fits.
    """
    for n in range(max_depth + 1):
        for m in range(max_depth + 1):
            if in_le_group(mono, m, n):
                return LEIndex(m, n)
    return None


def le_classify_series(s: Series, max_depth: int = 4) -> Optional[LEIndex]:
    """Componentwise maximum of the indices of the support (None if any is unclassified)."""
    best_m = best_n = 0
    for mono, _ in s.terms:
        idx = le_classify(mono, max_depth)
        if idx is None:
            return None
        best_m, best_n = max(best_m, idx.m), max(best_n, idx.n)
    return LEIndex(best_m, best_n)


def series_in_field(s: Series, m: int, n: int) -> bool:
    """Is every known support monomial of ``s`` in ``G_m^n``?"""
    return all(in_le_group(mono, m, n) for mono, _ in s.terms)


# -- the L element and the level gap -------------------------------------------


def build_L_element(depth: int) -> Series:
    """Partial sum ``x + log x + ... + log_D x`` of the element ``L``.

    The remaining terms ``log_{D+1} x, log_{D+2} x, ...`` are all at or below
    ``log_{D+1} x``, which becomes the cutoff.
    """
    if depth < 0:
        raise PreconditionError("depth must be >= 0")
    terms = tuple((depth_word(k), 1) for k in range(depth + 1))
    return Series(terms, TruncationMark(depth_word(depth + 1), depth))


def level_gap_demo(i: int, depth: int, max_n: int = DEFAULT_MAX_N):
    """Levels of ``T - S`` and ``S`` with respect to ``S = log_i x``.

    ``T = L - (x + ... + log_{i-1} x)`` is the tail of ``L`` from ``log_i x``
    on.  Returns ``(level(T - S, S), level(S, S))``.
    """
    if not 1 <= i < depth - 1:
        raise PreconditionError("need 1 <= i < depth - 1, got i=%d, depth=%d" % (i, depth))
    L = build_L_element(depth)
    head = Series((depth_word(k), 1) for k in range(i))
    T = L - head
    S_ = S.monomial(depth_word(i))
    return level(T - S_, S_, LOGWORDS, max_n), level(S_, S_, LOGWORDS, max_n)
