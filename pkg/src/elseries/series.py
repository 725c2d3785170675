"""Finitely supported Hahn series over the monomial tower.

A :class:`Series` stores its terms in strictly descending monomial order.  A
series may carry a :class:`TruncationMark`: every stored monomial is above the
mark's cutoff, and the (unknown) remainder consists of terms at or below it.
Operations propagate marks conservatively, so the stored terms of any result
are always exact.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import factorial
from typing import NamedTuple, Optional

from .coeff import as_coefficient
from .errors import (
    DivisionByZero,
    IncomparableUnderTruncation,
    LogOutsideDomain,
    NonPositive,
    NotInfinitesimal,
    PreconditionError,
    ZeroSeries,
)
from .monomials import (
    ONE,
    ExpOf,
    Monomial,
    Word,
    cmp_monomial,
    mul_monomial,
    power_monomial,
    sign_vs_one,
)


class TruncationMark:
    """Cutoff monomial plus the expansion order that produced it.

    Two marks are equal when their cutoffs are; ``order_used`` is provenance.
    """

    __slots__ = ("cutoff", "order_used")

    def __init__(self, cutoff: Monomial, order_used: int = 0):
        self.cutoff = cutoff
        self.order_used = order_used

    def __eq__(self, other):
        return isinstance(other, TruncationMark) and self.cutoff == other.cutoff

    def __hash__(self):
        return hash(self.cutoff)

    def __repr__(self):
        return "TruncationMark(%r, order_used=%d)" % (self.cutoff, self.order_used)


def _coarser(a: Optional[TruncationMark], b: Optional[TruncationMark]):
    if a is None:
        return b
    if b is None:
        return a
    return a if cmp_monomial(a.cutoff, b.cutoff) >= 0 else b


_term_key = functools.cmp_to_key(lambda s, t: cmp_monomial(t[0], s[0]))


class Series:
    """Immutable exact (or marked) series; see module docstring."""

    __slots__ = ("terms", "trunc", "_hash")

    def __init__(self, terms=(), trunc: Optional[TruncationMark] = None):
        acc = {}
        for mono, c in terms:
            if not isinstance(mono, Monomial):
                raise TypeError("series terms need monomials, got %r" % (mono,))
            acc[mono] = acc.get(mono, Fraction(0)) + as_coefficient(c)
        ordered = sorted(((m, c) for m, c in acc.items() if c), key=_term_key)
        self.terms = tuple(_cut(ordered, trunc))
        self.trunc = trunc
        self._hash = None

    @classmethod
    def _raw(cls, terms, trunc):
        s = object.__new__(cls)
        s.terms = terms
        s.trunc = trunc
        s._hash = None
        return s

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = const(other)
        if not isinstance(other, Series):
            return NotImplemented
        return self.terms == other.terms and self.trunc == other.trunc

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.terms, self.trunc))
        return self._hash

    def __repr__(self):
        return "Series(%r)" % str(self)

    def __str__(self):
        from .expr import format_series

        return format_series(self)

    def __bool__(self):
        return bool(self.terms) or self.trunc is not None

    def is_exact(self):
        return self.trunc is None

    def is_zero(self):
        """Exactly zero (no terms and no mark)."""
        return not self.terms and self.trunc is None

    def support(self):
        return [m for m, _ in self.terms]

    def coefficient(self, mono: Monomial) -> Fraction:
        for m, c in self.terms:
            if m == mono:
                return c
        return Fraction(0)

    # -- arithmetic operators -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(other, -self)

    def __neg__(self):
        return Series._raw(tuple((m, -c) for m, c in self.terms), self.trunc)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise TypeError("use series.power() for negative or rational exponents")
        return _int_power(self, k)

    def __lt__(self, other):
        return cmp(self, _coerce(other)) < 0

    def __le__(self, other):
        return cmp(self, _coerce(other)) <= 0

    def __gt__(self, other):
        return cmp(self, _coerce(other)) > 0

    def __ge__(self, other):
        return cmp(self, _coerce(other)) >= 0

    def scale(self, c) -> "Series":
        c = as_coefficient(c)
        if not c:
            return ZERO
        return Series._raw(tuple((m, c * a) for m, a in self.terms), self.trunc)

    def times_monomial(self, mono: Monomial, c=1) -> "Series":
        """Exact multiplication by ``c * mono`` (marks move with the terms)."""
        c = as_coefficient(c)
        if not c:
            return ZERO
        terms = tuple((mul_monomial(m, mono), c * a) for m, a in self.terms)
        trunc = self.trunc
        if trunc is not None:
            trunc = TruncationMark(mul_monomial(trunc.cutoff, mono), trunc.order_used)
        return Series._raw(terms, trunc)

    def with_mark(self, cutoff: Monomial, order_used: int = 0) -> "Series":
        """Declare everything at or below ``cutoff`` unknown."""
        mark = _coarser(self.trunc, TruncationMark(cutoff, order_used))
        return Series._raw(tuple(_cut(self.terms, mark)), mark)

    def exact_part(self) -> "Series":
        return Series._raw(self.terms, None)


def _cut(terms, mark):
    if mark is None:
        return terms
    out = []
    for t in terms:
        if cmp_monomial(t[0], mark.cutoff) <= 0:
            break
        out.append(t)
    return out


def _coerce(x):
    if isinstance(x, Series):
        return x
    if isinstance(x, (int, Fraction)):
        return const(x)
    if isinstance(x, Monomial):
        return monomial(x)
    return None


ZERO = Series._raw((), None)


def const(c) -> Series:
    c = as_coefficient(c)
    return Series._raw(((ONE, c),), None) if c else ZERO


def monomial(m: Monomial, c=1) -> Series:
    c = as_coefficient(c)
    return Series._raw(((m, c),), None) if c else ZERO


ONE_SERIES = const(1)


def _upper_bound(s: Series) -> Monomial:
    """Largest monomial the true value of ``s`` can have (``s`` not exactly 0)."""
    if s.trunc is None:
        return s.terms[0][0]
    if not s.terms:
        return s.trunc.cutoff
    top = s.terms[0][0]
    return top if cmp_monomial(top, s.trunc.cutoff) >= 0 else s.trunc.cutoff


def add(s: Series, t: Series) -> Series:
    a, b = s.terms, t.terms
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        c = cmp_monomial(a[i][0], b[j][0])
        if c > 0:
            out.append(a[i])
            i += 1
        elif c < 0:
            out.append(b[j])
            j += 1
        else:
            total = a[i][1] + b[j][1]
            if total:
                out.append((a[i][0], total))
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    mark = _coarser(s.trunc, t.trunc)
    return Series._raw(tuple(_cut(out, mark)), mark)


def sub(s: Series, t: Series) -> Series:
    return add(s, -t)


def mul(s: Series, t: Series) -> Series:
    if s.is_zero() or t.is_zero():
        return ZERO
    acc = {}
    for ms, cs in s.terms:
        for mt, ct in t.terms:
            m = mul_monomial(ms, mt)
            acc[m] = acc.get(m, 0) + cs * ct
    mark = None
    if t.trunc is not None:
        mark = TruncationMark(mul_monomial(_upper_bound(s), t.trunc.cutoff), t.trunc.order_used)
    if s.trunc is not None:
        mark = _coarser(
            mark,
            TruncationMark(mul_monomial(s.trunc.cutoff, _upper_bound(t)), s.trunc.order_used),
        )
    ordered = sorted(((m, c) for m, c in acc.items() if c), key=_term_key)
    return Series._raw(tuple(_cut(ordered, mark)), mark)


def _int_power(s: Series, k: int) -> Series:
    result = ONE_SERIES
    base = s
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def cmp(s: Series, t: Series) -> int:
    """Sign of ``s - t``.

    Raises :class:`IncomparableUnderTruncation` when the difference vanishes
    above the cutoffs but the two marks differ.
    """
    d = add(s, -t)
    if d.terms:
        return 1 if d.terms[0][1] > 0 else -1
    if d.trunc is None or s.trunc == t.trunc:
        return 0
    raise IncomparableUnderTruncation("series agree above %s; raise the order" % d.trunc.cutoff)


def sign(s: Series) -> int:
    return cmp(s, ZERO)


def valuation(s: Series) -> Monomial:
    """``max supp s``."""
    if s.terms:
        return s.terms[0][0]
    if s.trunc is not None:
        raise IncomparableUnderTruncation("no known terms above %s" % s.trunc.cutoff)
    raise ZeroSeries("the zero series has no valuation")


def leading_coefficient(s: Series) -> Fraction:
    valuation(s)
    return s.terms[0][1]


class TripartiteDecomposition(NamedTuple):
    purely_infinite: Series
    constant: Fraction
    infinitesimal: Series


class LeadDecomposition(NamedTuple):
    g: Monomial
    a: Fraction
    eps: Series


def decompose_tripartite(s: Series) -> TripartiteDecomposition:
    """Split into the parts supported above 1, at 1 and below 1.

    A mark at or above 1 leaves the lower parts unknown; it then travels with
    the purely infinite part and the other two parts are reported as zero.
    """
    big, small = [], []
    c = Fraction(0)
    for mono, a in s.terms:
        sgn = sign_vs_one(mono)
        if sgn > 0:
            big.append((mono, a))
        elif sgn < 0:
            small.append((mono, a))
        else:
            c = a
    mark = s.trunc
    if mark is not None and sign_vs_one(mark.cutoff) >= 0:
        return TripartiteDecomposition(Series._raw(tuple(big), mark), Fraction(0), ZERO)
    return TripartiteDecomposition(
        Series._raw(tuple(big), None), c, Series._raw(tuple(small), mark)
    )


def _split_lead(s: Series):
    g = valuation(s)
    a = s.terms[0][1]
    eps = s.times_monomial(g.inverse(), 1 / a)
    # drop the leading 1
    eps = Series._raw(eps.terms[1:], eps.trunc)
    return g, a, eps


def decompose_lead(s: Series) -> LeadDecomposition:
    """``s = g * a * (1 + eps)`` with ``g = v(s)``, ``a > 0``, ``eps`` infinitesimal."""
    if not s.terms and s.trunc is None:
        raise NonPositive("zero is not positive")
    g, a, eps = _split_lead(s)
    if a <= 0:
        raise NonPositive("leading coefficient %s is not positive" % a)
    return LeadDecomposition(g, a, eps)


def _check_infinitesimal(eps: Series):
    for mono, _ in eps.terms[:1]:
        if sign_vs_one(mono) >= 0:
            raise NotInfinitesimal("%s is not below 1" % mono)
    if eps.trunc is not None and sign_vs_one(eps.trunc.cutoff) >= 0:
        raise IncomparableUnderTruncation("cannot tell whether %s is infinitesimal" % eps)


def _power_sum(eps: Series, coeffs, n: int) -> Series:
    """``sum_{i=1}^{n} coeffs(i) * eps^i`` plus the mark ``ub(eps)^(n+1)``."""
    cutoff = power_monomial(_upper_bound(eps), n + 1)
    total = ZERO
    p = ONE_SERIES
    for i in range(1, n + 1):
        p = mul(p, eps)
        # terms at or below the final cutoff cannot survive; drop them early
        p = Series._raw(tuple(_cut(p.terms, TruncationMark(cutoff))), p.trunc)
        total = add(total, p.scale(coeffs(i)))
    return total.with_mark(cutoff, n)


def log1p(eps: Series, n: int) -> Series:
    """``log(1 + eps) = sum_{i>=1} (-1)^(i-1) eps^i / i`` up to order ``n``."""
    _check_infinitesimal(eps)
    if eps.is_zero():
        return ZERO
    return _power_sum(eps, lambda i: Fraction((-1) ** (i - 1), i), n)


def exp_infinitesimal(eps: Series, n: int) -> Series:
    """``exp(eps) = 1 + sum_{i>=1} eps^i / i!`` up to order ``n``."""
    _check_infinitesimal(eps)
    if eps.is_zero():
        return ONE_SERIES
    return add(ONE_SERIES, _power_sum(eps, lambda i: Fraction(1, factorial(i)), n))


def invert(s: Series, n: int) -> Series:
    """``1/s`` via the geometric series of the lead decomposition."""
    if not s.terms:
        if s.trunc is not None:
            raise IncomparableUnderTruncation("cannot invert a series with no known terms")
        raise DivisionByZero("division by the zero series")
    g, a, eps = _split_lead(s)
    ginv = g.inverse()
    if eps.is_zero():
        return monomial(ginv, 1 / a)
    geo = add(ONE_SERIES, _power_sum(eps, lambda i: (-1) ** i, n))
    return geo.times_monomial(ginv, 1 / a)


def _iroot(k: int, d: int) -> Optional[int]:
    lo, hi = 0, 1 << (k.bit_length() // d + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**d < k:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**d == k else None


def _rational_root(a: Fraction, q: Fraction) -> Optional[Fraction]:
    """``a^q`` when it is rational, else None (``a > 0``)."""
    rn = _iroot(a.numerator, q.denominator)
    rd = _iroot(a.denominator, q.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd) ** q.numerator


MAX_POWER = 4096


def power(s: Series, q, n: int) -> Series:
    """``s^q`` for rational ``q``.

    Integer powers of exact series are exact.  Other exponents use the
    binomial series of ``(1 + eps)^q`` and need ``s > 0`` with a rational
    ``a^q`` for the leading coefficient ``a``.  Exponents with a numerator or
    denominator beyond ``MAX_POWER`` are only accepted for ``+-monomial``.
    """
    q = as_coefficient(q)
    if max(abs(q.numerator), q.denominator) > MAX_POWER:
        if len(s.terms) != 1 or s.trunc is not None or abs(s.terms[0][1]) != 1:
            raise PreconditionError("exponent %s is too large for %s" % (q, s))
    if q.denominator == 1:
        k = q.numerator
        if k >= 0:
            return _int_power(s, k)
        return _int_power(invert(s, n), -k)
    g, a, eps = decompose_lead(s)
    aq = _rational_root(a, q)
    if aq is None:
        raise LogOutsideDomain("%s^(%s) is not rational" % (a, q))
    gq = power_monomial(g, q)
    if eps.is_zero():
        return monomial(gq, aq)

    def binom(i):
        c = Fraction(1)
        for j in range(i):
            c = c * (q - j) / (j + 1)
        return c

    return add(ONE_SERIES, _power_sum(eps, binom, n)).times_monomial(gq, aq)


def truncate_at(s: Series, cutoff: Monomial) -> Series:
    """Keep only the terms strictly above ``cutoff`` (no mark added)."""
    return Series._raw(tuple(_cut(s.terms, TruncationMark(cutoff))), None)


def agrees_above(s: Series, t: Series, cutoff: Optional[Monomial] = None) -> bool:
    """Do ``s`` and ``t`` have the same terms above the coarsest relevant cutoff?

    ``cutoff`` defaults to the coarser of the two marks; with neither, this is
    plain equality of the stored terms.
    """
    mark = _coarser(s.trunc, t.trunc)
    if cutoff is not None:
        mark = _coarser(mark, TruncationMark(cutoff))
    if mark is None:
        return s.terms == t.terms
    return truncate_at(s, mark.cutoff).terms == truncate_at(t, mark.cutoff).terms


def is_purely_infinite(s: Series) -> bool:
    return all(sign_vs_one(m) > 0 for m, _ in s.terms)


def height(s: Series) -> int:
    from .monomials import height as mono_height

    return max((mono_height(m) for m, _ in s.terms), default=0)


__all__ = [
    "ExpOf",
    "Word",
    "Series",
    "TruncationMark",
    "TripartiteDecomposition",
    "LeadDecomposition",
    "ZERO",
    "ONE_SERIES",
    "const",
    "monomial",
    "add",
    "sub",
    "mul",
    "invert",
    "power",
    "cmp",
    "sign",
    "valuation",
    "leading_coefficient",
    "decompose_tripartite",
    "decompose_lead",
    "log1p",
    "exp_infinitesimal",
    "truncate_at",
    "agrees_above",
    "is_purely_infinite",
]
