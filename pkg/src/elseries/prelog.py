"""Prelogarithmic sections and the prelogarithm they induce.

Three section shapes are supported, all on logarithmic words ``x_m = log_m x``:

``basic``
    ``prod x_m^r_m -> sum r_m * x_m`` -- an embedding that fails the growth
    axiom (``l(x_m) = x_m``).
``sigma``
    ``prod x_m^r_m -> sum r_m * x_{m+shift}`` for a shift ``>= 1``, i.e. the
    section induced by a decreasing map of the index set.
``logwords``
    the logarithmic-word section ``x^r0 (log x)^r1 ... -> r0 log x + r1 log_2 x
    + ...`` on non-negative depths.  It coincides with ``sigma`` for shift 1
    and is the section the exponential tower is built on.

On ``e(alpha)`` every section acts as ``e(alpha) -> alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import series as S
from .coeff import coeff_log
from .errors import NotInfinite
from .monomials import ExpOf, Monomial, Word, cmp_monomial, is_infinite, log_image
from .series import Series

SECTION_KINDS = ("basic", "sigma", "logwords")


@dataclass(frozen=True)
class PrelogSection:
    kind: str = "logwords"
    shift: int = 1

    def __post_init__(self):
        if self.kind not in SECTION_KINDS:
            raise ValueError("unknown section %r (choose from %s)" % (self.kind, ", ".join(SECTION_KINDS)))
        if self.kind == "sigma" and self.shift < 1:
            raise ValueError("sigma shift must be >= 1 so that sigma(gamma) < gamma")

    @classmethod
    def named(cls, name: str) -> "PrelogSection":
        return cls(kind=name)

    def __call__(self, g: Monomial) -> Series:
        return section_apply(self, g)


BASIC = PrelogSection("basic")
SIGMA = PrelogSection("sigma", 1)
LOGWORDS = PrelogSection("logwords")


def section_apply(l: PrelogSection, g: Monomial) -> Series:
    if isinstance(g, ExpOf):
        return g.arg
    if l.kind == "logwords":
        if any(m < 0 for m in g.depths):
            raise ValueError("the logarithmic-word section is defined on depths >= 0 only")
        return log_image(g)
    offset = 0 if l.kind == "basic" else l.shift
    return Series((Word({m + offset: 1}), r) for m, r in g.exponents)


def prelog_L(s: Series, l: PrelogSection = LOGWORDS, n: int = 8) -> Series:
    """``L(g * a * (1 + eps)) = l(g) + log a + log(1 + eps)``."""
    g, a, eps = S.decompose_lead(s)
    return S.add(S.add(section_apply(l, g), S.const(coeff_log(a))), S.log1p(eps, n))


def ga_check(l: PrelogSection, g: Monomial) -> bool:
    """Growth-axiom test at the monomial level: ``v(l(g)) < g`` for ``g > 1``."""
    if not is_infinite(g):
        raise NotInfinite("growth axiom is only checked for monomials > 1, got %s" % g)
    return cmp_monomial(S.valuation(section_apply(l, g)), g) < 0
