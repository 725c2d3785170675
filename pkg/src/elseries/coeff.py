"""Exact rational coefficients with a partial log/exp.

Coefficients are plain :class:`fractions.Fraction` values (always reduced,
denominator positive).  The ordered field of rationals has no logarithm of its
own, so ``coeff_log``/``coeff_exp`` consult a lookup table that can be swapped
for a richer one with :func:`use_coefficient_log`.
"""

from __future__ import annotations

import contextlib
import contextvars
import re
from fractions import Fraction
from typing import Mapping

from .errors import ExpOutsideDomain, LogOutsideDomain, NonPositive

Coefficient = Fraction

_COEFF_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def as_coefficient(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_coefficient(value)
    raise TypeError("cannot use %r as an exact coefficient" % (value,))


def parse_coefficient(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (optional sign).  Floats are rejected."""
    m = _COEFF_RE.match(text)
    if not m:
        raise ValueError("not a rational literal: %r" % (text,))
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError("zero denominator in %r" % (text,))
    return Fraction(num, den)


def format_coefficient(c: Fraction) -> str:
    return str(c)


class CoefficientLog:
    """A finite, order-preserving partial logarithm on positive rationals.

    ``table`` maps ``a`` to ``log a``.  The exponential is its inverse, so the
    two maps are mutually inverse on their domains by construction.
    """

    def __init__(self, table: Mapping = None):
        entries = {Fraction(1): Fraction(0)}
        for a, la in (table or {}).items():
            a, la = as_coefficient(a), as_coefficient(la)
            if a <= 0:
                raise ValueError("log table entry at non-positive %s" % a)
            entries[a] = la
        if entries[Fraction(1)] != 0:
            raise ValueError("log 1 must be 0")
        # order preservation makes the table injective
        ordered = sorted(entries.items())
        for (a, la), (b, lb) in zip(ordered, ordered[1:]):
            if not la < lb:
                raise ValueError("log table is not strictly increasing at %s, %s" % (a, b))
        self._log = entries
        self._exp = {la: a for a, la in entries.items()}

    def log(self, a: Fraction) -> Fraction:
        a = as_coefficient(a)
        if a <= 0:
            raise NonPositive("log of non-positive coefficient %s" % a)
        try:
            return self._log[a]
        except KeyError:
            raise LogOutsideDomain("log %s is not a known rational" % a) from None

    def exp(self, a: Fraction) -> Fraction:
        a = as_coefficient(a)
        try:
            return self._exp[a]
        except KeyError:
            raise ExpOutsideDomain("exp %s is not a known rational" % a) from None

    @property
    def log_domain(self):
        return frozenset(self._log)

    @property
    def exp_domain(self):
        return frozenset(self._exp)


DEFAULT_COEFFICIENT_LOG = CoefficientLog()

_current = contextvars.ContextVar("coefficient_log", default=DEFAULT_COEFFICIENT_LOG)


def current_coefficient_log() -> CoefficientLog:
    return _current.get()


@contextlib.contextmanager
def use_coefficient_log(oracle: CoefficientLog):
    """Temporarily install ``oracle`` for the current thread/context."""
    token = _current.set(oracle)
    try:
        yield oracle
    finally:
        _current.reset(token)


def coeff_log(a) -> Fraction:
    return _current.get().log(a)


def coeff_exp(a) -> Fraction:
    return _current.get().exp(a)
