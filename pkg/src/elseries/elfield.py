"""Exp and Log on the exponential closure, plus the level invariant."""

from __future__ import annotations

from typing import NamedTuple

from . import series as S
from .coeff import coeff_exp
from .errors import IncomparableUnderTruncation, NoLevelWitness, NotInfinite
from .monomials import Monomial, exp_monomial, sign_vs_one
from .prelog import LOGWORDS, PrelogSection, prelog_L, section_apply
from .series import Series

DEFAULT_MAX_N = 16


class LevelResult(NamedTuple):
    z: int
    witnessN: int


def exp_series(s: Series, l: PrelogSection = LOGWORDS, n: int = 8) -> Series:
    """``Exp(s) = e(purely infinite part) * exp(constant) * exp(infinitesimal part)``.

    ``l`` is accepted for symmetry with :func:`log_series`; the purely infinite
    part is always exponentiated into the canonical tower.
    """
    big, c, small = S.decompose_tripartite(s)
    if big.trunc is not None:
        raise IncomparableUnderTruncation("the mark %s hides the constant term" % big.trunc.cutoff)
    head = exp_monomial(big)
    return S.exp_infinitesimal(small, n).times_monomial(head, coeff_exp(c))


def log_series(s: Series, l: PrelogSection = LOGWORDS, n: int = 8) -> Series:
    """``Log(s)`` for ``s > 0``; ``e(alpha)`` contributes ``alpha``."""
    return prelog_L(s, l, n)


def _check_above_constants(s: Series) -> Monomial:
    g = S.valuation(s)
    if sign_vs_one(g) <= 0 or s.terms[0][1] <= 0:
        raise NotInfinite("%s is not above every constant" % s)
    return g


def log_leading(s: Series, l: PrelogSection = LOGWORDS) -> Monomial:
    """``v(Log s)`` for ``s`` above every constant, computed without truncation."""
    return S.valuation(section_apply(l, _check_above_constants(s)))


def log_chain(s: Series, length: int, l: PrelogSection = LOGWORDS) -> list:
    """``[v(s), v(Log s), v(Log_2 s), ...]`` with ``length`` entries."""
    g = _check_above_constants(s)
    chain = [g]
    while len(chain) < length:
        # Log of a positive infinite series has a positive infinite leading term
        g = S.valuation(section_apply(l, g))
        chain.append(g)
    return chain


def level(s: Series, alpha: Series, l: PrelogSection = LOGWORDS, max_n: int = DEFAULT_MAX_N) -> LevelResult:
    """Smallest witness of ``v(Log_{N+z} s) = v(Log_N alpha)``.

    Scans ``N = 0..max_n`` and, for each, ``z = -max_n..max_n`` ascending.
    """
    chain_s = log_chain(s, 2 * max_n + 1, l)
    chain_a = log_chain(alpha, max_n + 1, l)
    for n in range(max_n + 1):
        target = chain_a[n]
        for z in range(-max_n, max_n + 1):
            k = n + z
            if 0 <= k < len(chain_s) and chain_s[k] == target:
                return LevelResult(z, n)
    raise NoLevelWitness("no level witness with N, |z| <= %d" % max_n)
