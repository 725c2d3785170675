"""Command-line front end.

    elseries eval "log(x^2 + x)" --order 4
    elseries level "log(x)" "x"
    elseries level-gap --i 1 --depth 5

Expression arguments that start with ``{`` are read as JSON series documents.
Exit status: 0 on success, 1 on a domain error, 2 on a syntax error.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys

from . import series as S
from .elfield import DEFAULT_MAX_N, exp_series, level, log_series
from .errors import ELError, ExprSyntaxError
from .expr import DEFAULT_ORDER, evaluate, format_monomial, format_series
from .lemorph import level_gap_demo, le_classify, le_classify_series, phi_apply, psi_apply
from .prelog import SECTION_KINDS, PrelogSection, ga_check
from .serialize import loads, monomial_to_json, series_to_json

EXIT_OK, EXIT_DOMAIN, EXIT_SYNTAX = 0, 1, 2


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so batch mode can keep going
    def error(self, message):
        raise _ArgumentError(message)


def _series_arg(args, text):
    if text.lstrip().startswith("{"):
        try:
            return loads(text)
        except (ValueError, KeyError, TypeError) as exc:
            raise ExprSyntaxError("bad JSON series: %s" % exc, 0) from None
    return evaluate(text, args.order, PrelogSection.named(args.section))


def _single_monomial(s):
    if len(s.terms) != 1 or s.trunc is not None:
        raise ELError("expected a single monomial, got %s" % format_series(s))
    return s.terms[0][0]


def _show_series(args, s):
    return json.dumps(series_to_json(s)) if args.json else format_series(s)


def _show_monomial(args, m):
    return json.dumps(monomial_to_json(m)) if args.json else format_monomial(m)


def _section(args):
    return PrelogSection.named(args.section)


def cmd_eval(args):
    return _show_series(args, _series_arg(args, args.expr))


def cmd_add(args):
    return _show_series(args, S.add(_series_arg(args, args.a), _series_arg(args, args.b)))


def cmd_mul(args):
    return _show_series(args, S.mul(_series_arg(args, args.a), _series_arg(args, args.b)))


def cmd_cmp(args):
    c = S.cmp(_series_arg(args, args.a), _series_arg(args, args.b))
    return {-1: "<", 0: "=", 1: ">"}[c]


def cmd_log(args):
    return _show_series(args, log_series(_series_arg(args, args.expr), _section(args), args.order))


def cmd_exp(args):
    return _show_series(args, exp_series(_series_arg(args, args.expr), _section(args), args.order))


def cmd_val(args):
    return _show_monomial(args, S.valuation(_series_arg(args, args.expr)))


def cmd_ga_check(args):
    g = _single_monomial(_series_arg(args, args.expr))
    return "true" if ga_check(_section(args), g) else "false"


def cmd_psi(args):
    return _show_series(args, psi_apply(_series_arg(args, args.expr)))


def cmd_phi(args):
    return _show_series(args, phi_apply(_series_arg(args, args.expr)))


def cmd_classify(args):
    s = _series_arg(args, args.expr)
    if len(s.terms) == 1 and s.trunc is None:
        idx = le_classify(s.terms[0][0], args.max_depth)
    else:
        idx = le_classify_series(s, args.max_depth)
    if idx is None:
        return "not in LE (max depth %d)" % args.max_depth
    return "m=%d n=%d" % idx


def cmd_level(args):
    res = level(_series_arg(args, args.s), _series_arg(args, args.alpha), _section(args), args.max_n)
    return "z=%d N=%d" % res


def cmd_level_gap(args):
    gap, ref = level_gap_demo(args.i, args.depth, args.max_n)
    return "level(T-S)=%d N=%d\nlevel(S)=%d N=%d" % (gap.z, gap.witnessN, ref.z, ref.witnessN)


def cmd_fmt(args):
    return _show_series(args, _series_arg(args, args.expr))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order N (default %(default)s)")
    common.add_argument("--section", choices=SECTION_KINDS, default="logwords")
    common.add_argument("--json", action="store_true", help="print series as JSON")

    p = _Parser(prog="elseries", description="Exponential-logarithmic transseries calculator")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, *positional, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        for pos in positional:
            sp.add_argument(pos)
        sp.set_defaults(func=func)
        return sp

    add("eval", cmd_eval, "expr", help="evaluate and print an expression")
    add("add", cmd_add, "a", "b")
    add("mul", cmd_mul, "a", "b")
    add("cmp", cmd_cmp, "a", "b", help="print <, = or >")
    add("log", cmd_log, "expr")
    add("exp", cmd_exp, "expr")
    add("val", cmd_val, "expr", help="leading monomial")
    add("ga-check", cmd_ga_check, "expr", help="growth axiom v(l(g)) < g for a monomial g > 1")
    add("psi", cmd_psi, "expr", help="substitute log x for x")
    add("phi", cmd_phi, "expr", help="substitute exp x for x")
    sp = add("classify", cmd_classify, "expr", help="smallest (m, n) with the monomial in G_m^n")
    sp.add_argument("--max-depth", type=int, default=4)
    sp = add("level", cmd_level, "s", "alpha", help="level of s with respect to alpha")
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    sp = add("level-gap", cmd_level_gap, help="levels of T - S and S for the partial sums of L")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    add("fmt", cmd_fmt, "expr", help="normalize and print (use --json for the JSON form)")
    sp = sub.add_parser("batch", help="run one command per stdin line")
    sp.set_defaults(func=None)
    return p


def run(argv, out=sys.stdout, err=sys.stderr) -> int:
    """Run one command line; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as exc:
        print("usage error: %s" % exc, file=err)
        return EXIT_SYNTAX
    if args.command == "batch":
        return _batch(sys.stdin, out, err)
    try:
        print(args.func(args), file=out)
    except ExprSyntaxError as exc:
        print("syntax error %s" % exc, file=err)
        return EXIT_SYNTAX
    except ELError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=err)
        return EXIT_DOMAIN
    return EXIT_OK


def _batch(lines, out, err) -> int:
    worst = EXIT_OK
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            argv = shlex.split(line)
        except ValueError as exc:
            print("usage error: %s" % exc, file=err)
            worst = max(worst, EXIT_SYNTAX)
            continue
        if argv and argv[0] == "batch":
            print("usage error: nested batch", file=err)
            worst = max(worst, EXIT_SYNTAX)
            continue
        worst = max(worst, run(argv, out, err))
    return worst


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
