"""Exact arithmetic on exponential-logarithmic transseries."""

from . import series  # noqa: F401  (loads monomials/series in a safe order)
from .coeff import CoefficientLog, coeff_exp, coeff_log, use_coefficient_log
from .elfield import LevelResult, exp_series, level, log_leading, log_series
from .errors import *  # noqa: F401,F403
from .expr import evaluate, eval_expr, format_series, parse_expr
from .lemorph import (
    build_L_element,
    comp_h_check,
    contraction_check,
    le_classify,
    level_gap_demo,
    phi_apply,
    psi_apply,
)
from .monomials import ONE, X, ExpOf, Word, cmp_monomial, depth_word, exp_monomial, height, mul_monomial, normalize_monomial
from .prelog import BASIC, LOGWORDS, SIGMA, PrelogSection, ga_check, prelog_L, section_apply
from .series import Series, TruncationMark

__version__ = "0.1.0"
