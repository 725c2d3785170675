"""Expression language: parse, evaluate, pretty-print.

Grammar (``O(m)`` is an extension that renders truncation marks)::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | factor
    factor   := atom ("^" exponent)?
    exponent := "-"? rational | "(" "-"? rational ")"
    atom     := rational | "x" | "log" ("^" "[" "-"? int "]")? "(" expr ")"
              | "exp" "(" expr ")" | "e" "(" expr ")" | "O" "(" expr ")"
              | "(" expr ")"
    rational := int ("/" posint)?

A rational literal is greedy: ``x/2/3`` reads as ``x / (2/3)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Union

from . import series as S
from .elfield import exp_series, log_series
from .errors import ELError, ExprSyntaxError
from .monomials import ExpOf, Monomial, Word, X
from .prelog import LOGWORDS, PrelogSection
from .series import Series

DEFAULT_ORDER = 8
MAX_NESTING = 150


# -- AST -----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction

    def __repr__(self):
        return str(self.value)


@dataclass(frozen=True)
class Var:
    def __repr__(self):
        return "x"


@dataclass(frozen=True)
class Log:
    arg: "Expr"
    times: int = 1


@dataclass(frozen=True)
class Exp:
    arg: "Expr"


@dataclass(frozen=True)
class BigO:
    arg: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: Fraction


Expr = Union[Num, Var, Log, Exp, BigO, Neg, Add, Sub, Mul, Div, Pow]


# -- tokenizer -----------------------------------------------------------------

_IDENTS = {"x", "log", "exp", "e", "O"}
_PUNCT = set("+-*/^()[]")


@dataclass
class _Tok:
    kind: str  # "num", an identifier, a punctuation char, or "end"
    text: str
    pos: int


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8", "surrogatepass"))


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
        elif "0" <= ch <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            toks.append(_Tok("num", text[i:j], i))
            i = j
        elif ("a" <= ch <= "z") or ("A" <= ch <= "Z"):
            j = i
            while j < n and (("a" <= text[j] <= "z") or ("A" <= text[j] <= "Z")):
                j += 1
            word = text[i:j]
            if word not in _IDENTS:
                raise ExprSyntaxError("unknown identifier %r" % word, _byte_offset(text, i), _IDENTS)
            toks.append(_Tok(word, word, i))
            i = j
        elif ch in _PUNCT:
            toks.append(_Tok(ch, ch, i))
            i += 1
        else:
            raise ExprSyntaxError("unexpected character %r" % ch, _byte_offset(text, i))
    toks.append(_Tok("end", "", n))
    return toks


# -- parser --------------------------------------------------------------------

_ATOM_START = {"number", "x", "log", "exp", "e", "O", "("}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected, message=None):
        tok = self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExprSyntaxError(message or "unexpected %s" % found, _byte_offset(self.text, tok.pos), expected)

    def expect(self, kind, expected=None):
        if self.tok.kind != kind:
            self.fail(expected or {kind})
        tok = self.tok
        self.i += 1
        return tok

    def integer(self, expected=None) -> int:
        tok = self.expect("num", expected)
        try:
            return int(tok.text)
        except ValueError:  # beyond the interpreter's int-string digit limit
            raise ExprSyntaxError("number too long", _byte_offset(self.text, tok.pos), {"shorter number"}) from None

    def enter(self):
        self.depth += 1
        if self.depth > MAX_NESTING:
            self.fail(set(), "expression nested too deeply")

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            self.fail({"+", "-", "*", "/", "end of input"})
        return e

    def expr(self):
        self.enter()
        e = self.term()
        while self.tok.kind in ("+", "-"):
            op = self.tok.kind
            self.i += 1
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        self.depth -= 1
        return e

    def term(self):
        e = self.unary()
        while self.tok.kind in ("*", "/"):
            op = self.tok.kind
            self.i += 1
            rhs = self.unary()
            e = Mul(e, rhs) if op == "*" else Div(e, rhs)
        return e

    def unary(self):
        if self.tok.kind == "-":
            self.enter()
            self.i += 1
            e = Neg(self.unary())
            self.depth -= 1
            return e
        return self.factor()

    def factor(self):
        base = self.atom()
        if self.tok.kind == "^":
            self.i += 1
            return Pow(base, self.exponent())
        return base

    def signed_int(self, expected):
        neg = False
        if self.tok.kind == "-":
            neg = True
            self.i += 1
        k = self.integer(expected)
        return -k if neg else k

    def rational_tail(self, num: int) -> Fraction:
        # greedy: "p/q" is one literal when a number follows the slash
        if self.tok.kind == "/" and self.toks[self.i + 1].kind == "num":
            self.i += 1
            den_tok = self.tok
            den = self.integer()
            if den == 0:
                raise ExprSyntaxError("zero denominator", _byte_offset(self.text, den_tok.pos), {"positive integer"})
            return Fraction(num, den)
        return Fraction(num)

    def exponent(self) -> Fraction:
        if self.tok.kind == "(":
            self.i += 1
            q = self.rational_tail(self.signed_int({"number", "-"}))
            self.expect(")", {")"})
            return q
        return self.rational_tail(self.signed_int({"number", "-", "("}))

    def parenthesized(self):
        self.expect("(", {"("})
        e = self.expr()
        self.expect(")", {")", "+", "-", "*", "/", "^"})
        return e

    def atom(self):
        kind = self.tok.kind
        if kind == "num":
            return Num(self.rational_tail(self.integer()))
        if kind == "x":
            self.i += 1
            return Var()
        if kind == "log":
            self.i += 1
            times = 1
            if self.tok.kind == "^":
                self.i += 1
                self.expect("[", {"["})
                pos = self.tok.pos
                times = self.signed_int({"number", "-"})
                if abs(times) > MAX_NESTING:
                    raise ExprSyntaxError("iteration count too large", _byte_offset(self.text, pos), {"smaller count"})
                self.expect("]", {"]"})
            return Log(self.parenthesized(), times)
        if kind in ("exp", "e"):
            self.i += 1
            return Exp(self.parenthesized())
        if kind == "O":
            self.i += 1
            return BigO(self.parenthesized())
        if kind == "(":
            return self.parenthesized()
        self.fail(_ATOM_START)


def parse_expr(text: Union[str, bytes]) -> Expr:
    """Parse ``text``; raises :class:`ExprSyntaxError` with a byte offset."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ExprSyntaxError("invalid UTF-8", exc.start) from None
    return _Parser(text).parse()


# -- evaluation ----------------------------------------------------------------


def eval_expr(e: Expr, n: int = DEFAULT_ORDER, section: PrelogSection = LOGWORDS) -> Series:
    """Evaluate to a normalized series; divisions and log/exp expand to order ``n``."""

    def ev(e):
        if isinstance(e, Num):
            return S.const(e.value)
        if isinstance(e, Var):
            return S.monomial(X)
        if isinstance(e, Add):
            return S.add(ev(e.left), ev(e.right))
        if isinstance(e, Sub):
            return S.sub(ev(e.left), ev(e.right))
        if isinstance(e, Mul):
            return S.mul(ev(e.left), ev(e.right))
        if isinstance(e, Div):
            return S.mul(ev(e.left), S.invert(ev(e.right), n))
        if isinstance(e, Neg):
            return -ev(e.arg)
        if isinstance(e, Pow):
            return S.power(ev(e.base), e.exponent, n)
        if isinstance(e, Log):
            s = ev(e.arg)
            for _ in range(e.times):
                s = log_series(s, section, n)
            for _ in range(-e.times):
                s = exp_series(s, section, n)
            return s
        if isinstance(e, Exp):
            return exp_series(ev(e.arg), section, n)
        if isinstance(e, BigO):
            s = ev(e.arg)
            if len(s.terms) != 1 or s.trunc is not None:
                raise ELError("O(...) needs a single exact term, got %s" % s)
            return S.ZERO.with_mark(s.terms[0][0], n)
        raise TypeError("not an expression node: %r" % (e,))

    return ev(e)


def evaluate(text: Union[str, bytes], n: int = DEFAULT_ORDER, section: PrelogSection = LOGWORDS) -> Series:
    return eval_expr(parse_expr(text), n, section)


# -- formatting ----------------------------------------------------------------


def _format_depth(k: int) -> str:
    return "x" if k == 0 else "log^[%d](x)" % k


def format_monomial(m: Monomial) -> str:
    if isinstance(m, ExpOf):
        return "e(%s)" % format_series(m.arg)
    if not m.exponents:
        return "1"
    parts = []
    for k, r in m.exponents:
        base = _format_depth(k)
        parts.append(base if r == 1 else "%s^%s" % (base, r))
    return "*".join(parts)


def format_series(s: Series) -> str:
    out = []
    for idx, (m, c) in enumerate(s.terms):
        neg = c < 0
        a = -c if neg else c
        if isinstance(m, Word) and m.is_one():
            body = str(a)
        elif a == 1:
            body = format_monomial(m)
        else:
            body = "%s*%s" % (a, format_monomial(m))
        if idx == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    if s.trunc is not None:
        big_o = "O(%s)" % format_monomial(s.trunc.cutoff)
        out.append(" + " + big_o if out else big_o)
    return "".join(out) if out else "0"
