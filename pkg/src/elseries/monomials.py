"""Ordered monomial groups of the exponential-logarithmic tower.

A monomial is either

* a :class:`Word` -- a logarithmic word ``x^r0 * (log x)^r1 * ... * (log_n x)^rn``
  stored as a finite map ``depth -> exponent`` (depth 0 is ``x``), or
* an :class:`ExpOf` -- the formal exponential ``e(alpha)`` of a purely
  infinite series ``alpha`` that is not the log-image of a word.

Both kinds are identified through their log-image (``log_image``): a word
``g`` maps to ``sum r_m * log_{m+1} x`` and ``e(alpha)`` maps to ``alpha``.
Products and the order are read off the log-images, and the canonical form
folds ``e(l(g))`` back to ``g`` so structural equality is value equality.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .coeff import as_coefficient
from .errors import NotPurelyInfinite


class Monomial:
    """Common operators for :class:`Word` and :class:`ExpOf`."""

    __slots__ = ()

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return mul_monomial(self, other)

    def __truediv__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return mul_monomial(self, other.inverse())

    def __pow__(self, q):
        return power_monomial(self, q)

    def __lt__(self, other):
        return cmp_monomial(self, other) < 0

    def __le__(self, other):
        return cmp_monomial(self, other) <= 0

    def __gt__(self, other):
        return cmp_monomial(self, other) > 0

    def __ge__(self, other):
        return cmp_monomial(self, other) >= 0

    def __str__(self):
        from .expr import format_monomial

        return format_monomial(self)


class Word(Monomial):
    """Logarithmic word with finite support.

    ``Word({0: 2, 1: -1})`` is ``x^2 / log x``.  Depth indices may be negative
    (exponential iterates of ``x``) for the integer-indexed Hahn group; the
    exponential tower itself only ever produces non-negative depths.
    """

    __slots__ = ("exponents", "_hash")

    def __init__(self, exponents: Union[Mapping, Iterable] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc = {}
        for m, r in items:
            if not isinstance(m, int) or isinstance(m, bool):
                raise TypeError("depth index must be an int, got %r" % (m,))
            acc[m] = acc.get(m, Fraction(0)) + as_coefficient(r)
        self.exponents = tuple(sorted((m, r) for m, r in acc.items() if r))
        self._hash = hash(("W", self.exponents))

    @classmethod
    def _raw(cls, exponents):
        w = object.__new__(cls)
        w.exponents = exponents
        w._hash = hash(("W", exponents))
        return w

    def __eq__(self, other):
        return isinstance(other, Word) and self.exponents == other.exponents

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Word({%s})" % ", ".join("%d: %r" % (m, str(r)) for m, r in self.exponents)

    def exponent(self, m: int) -> Fraction:
        for k, r in self.exponents:
            if k == m:
                return r
        return Fraction(0)

    @property
    def depths(self):
        return tuple(m for m, _ in self.exponents)

    def is_one(self):
        return not self.exponents

    def inverse(self):
        return Word._raw(tuple((m, -r) for m, r in self.exponents))


class ExpOf(Monomial):
    """``e(alpha)``.

    The constructor does not normalize; use :func:`exp_monomial` (or
    :func:`normalize_monomial`) to obtain the canonical representative.
    """

    __slots__ = ("arg", "_hash", "_height")

    def __init__(self, arg):
        if not isinstance(arg, _series.Series):
            raise TypeError("ExpOf needs a Series, got %r" % (arg,))
        if arg.trunc is not None:
            raise ValueError("cannot exponentiate a truncated series into a monomial")
        self.arg = arg
        self._hash = hash(("E", arg))
        self._height = None

    def __eq__(self, other):
        return isinstance(other, ExpOf) and self.arg == other.arg

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "ExpOf(%r)" % (self.arg,)

    def is_one(self):
        return False

    def inverse(self):
        return ExpOf(-self.arg)


ONE = Word()
X = Word({0: 1})


def depth_word(m: int, k=1) -> Word:
    """``(log_m x)^k``."""
    return Word({m: k})


def height(m: Monomial) -> int:
    if isinstance(m, Word):
        return 0
    if m._height is None:
        m._height = 1 + max(height(mono) for mono, _ in m.arg.terms)
    return m._height


def log_image(m: Monomial):
    """The log-image of ``m`` as an exact purely infinite series.

    For words this is the logarithmic-word section
    ``x^r0 (log x)^r1 ... -> r0 log x + r1 log_2 x + ...``; for ``e(alpha)`` it
    is ``alpha``.
    """
    if isinstance(m, ExpOf):
        return m.arg
    return _word_log_image(m)


@functools.lru_cache(maxsize=1 << 14)
def _word_log_image(w: Word):
    # ascending depth is descending germ order, so the terms come out sorted
    return _series.Series._raw(
        tuple((Word._raw(((m + 1, Fraction(1)),)), r) for m, r in w.exponents), None
    )


def is_infinite(m: Monomial) -> bool:
    """``m > 1``."""
    return sign_vs_one(m) > 0


def sign_vs_one(m: Monomial) -> int:
    if isinstance(m, Word):
        if not m.exponents:
            return 0
        return 1 if m.exponents[0][1] > 0 else -1
    # the argument of a canonical e(.) is never zero
    return 1 if m.arg.terms[0][1] > 0 else -1


def _cmp_words(a: Word, b: Word) -> int:
    # anti-lexicographic: the smallest depth with differing exponents decides
    ea, eb = a.exponents, b.exponents
    i = j = 0
    while i < len(ea) or j < len(eb):
        ma = ea[i][0] if i < len(ea) else None
        mb = eb[j][0] if j < len(eb) else None
        if mb is None or (ma is not None and ma < mb):
            return 1 if ea[i][1] > 0 else -1
        if ma is None or mb < ma:
            return -1 if eb[j][1] > 0 else 1
        ra, rb = ea[i][1], eb[j][1]
        if ra != rb:
            return 1 if ra > rb else -1
        i += 1
        j += 1
    return 0


@functools.lru_cache(maxsize=1 << 16)
def cmp_monomial(a: Monomial, b: Monomial) -> int:
    """Total order: -1, 0 or 1.  ``e(a1) < e(a2)`` iff ``a1 < a2``."""
    if a == b:
        return 0
    if isinstance(a, Word) and isinstance(b, Word):
        return _cmp_words(a, b)
    # log-images are exact, so this never hits a truncation ambiguity
    return _series.cmp(log_image(a), log_image(b))


def _fold(alpha) -> Monomial:
    """Canonical representative of ``e(alpha)`` for purely infinite exact alpha."""
    if not alpha.terms:
        return ONE
    exps = []
    for mono, c in alpha.terms:
        if (
            isinstance(mono, Word)
            and len(mono.exponents) == 1
            and mono.exponents[0][1] == 1
            and mono.exponents[0][0] >= 1
        ):
            exps.append((mono.exponents[0][0] - 1, c))
        else:
            return ExpOf(alpha)
    return Word._raw(tuple(exps))


def normalize_monomial(raw: Monomial) -> Monomial:
    """Fold ``e(l(g))`` to the word ``g``; reject non purely infinite arguments."""
    if isinstance(raw, Word):
        return raw
    alpha = raw.arg
    for mono, _ in alpha.terms:
        if not is_infinite(mono):
            raise NotPurelyInfinite("e(...) needs every support monomial > 1, got %s" % mono)
    return _fold(alpha)


def exp_monomial(alpha) -> Monomial:
    """Canonical ``e(alpha)``."""
    return normalize_monomial(ExpOf(alpha))


@functools.lru_cache(maxsize=1 << 16)
def mul_monomial(a: Monomial, b: Monomial) -> Monomial:
    if isinstance(a, Word) and isinstance(b, Word):
        if not a.exponents:
            return b
        if not b.exponents:
            return a
        acc = dict(a.exponents)
        for m, r in b.exponents:
            s = acc.get(m, 0) + r
            if s:
                acc[m] = s
            else:
                del acc[m]
        return Word._raw(tuple(sorted(acc.items())))
    if a.is_one():
        return b
    if b.is_one():
        return a
    return _fold(log_image(a) + log_image(b))


def power_monomial(m: Monomial, q) -> Monomial:
    q = as_coefficient(q)
    if isinstance(m, Word):
        return Word._raw(tuple((k, r * q) for k, r in m.exponents if r * q))
    if q == 0:
        return ONE
    return _fold(m.arg.scale(q))


# series builds on the classes above; imported last to break the cycle
from . import series as _series  # noqa: E402
