"""Recursive-descent parser for polynomial expressions.

Grammar::

    poly     := sign? term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := base ("^" nat)?
    base     := rational | var | "(" poly ")"
    var      := "x" nat | "x" | "y" | "z"
    rational := int ("/" posint)?

``x``, ``y`` and ``z`` stand for ``x1``, ``x2`` and ``x3`` and are only
accepted when the arity is at most 3.  There is no implicit multiplication.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ArityError, ParseError
from .mpoly import MPoly

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<var>x\d+|[xyz](?![a-zA-Z0-9_]))|(?P<num>\d+)|(?P<op>[-+*/^()])"
)
_ALIASES = {"x": 1, "y": 2, "z": 3}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


# expression tree


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int
    alias: bool
    token: Token


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Add:
    args: tuple


@dataclass(frozen=True)
class Mul:
    args: tuple


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int


Expr = Union[Num, Var, Neg, Add, Mul, Pow]


@dataclass(frozen=True)
class ParsedExpr:
    source: str
    arity: int
    ast: Expr


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(src):
        match = _TOKEN.match(src, pos)
        col = pos - line_start + 1
        if match is None:
            raise ParseError(f"unexpected character {src[pos]!r}", line, col)
        kind = match.lastgroup
        text = match.group()
        if kind == "ws":
            for i, ch in enumerate(text):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            tokens.append(Token(kind, text, line, col))
        pos = match.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.column)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")

    def nat(self) -> int:
        if self.tok.kind != "num":
            self.error("expected a natural number")
        value = int(self.tok.text)
        self.i += 1
        return value

    def parse(self) -> Expr:
        expr = self.poly()
        if self.tok.kind != "end":
            self.error(f"unexpected {self.tok.text!r}")
        return expr

    def poly(self) -> Expr:
        terms = []
        if self.accept("-"):
            terms.append(Neg(self.term()))
        else:
            self.accept("+")
            terms.append(self.term())
        while True:
            if self.accept("+"):
                terms.append(self.term())
            elif self.accept("-"):
                terms.append(Neg(self.term()))
            else:
                break
        return terms[0] if len(terms) == 1 else Add(tuple(terms))

    def term(self) -> Expr:
        factors = [self.factor()]
        while self.accept("*"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self) -> Expr:
        base = self.base()
        if self.accept("^"):
            if self.tok.kind == "op" and self.tok.text == "-":
                self.error("exponents must be natural numbers")
            return Pow(base, self.nat())
        return base

    def base(self) -> Expr:
        tok = self.tok
        if tok.kind == "num":
            num = self.nat()
            if self.accept("/"):
                den_tok = self.tok
                den = self.nat()
                if den == 0:
                    self.error("zero denominator", den_tok)
                return Num(Fraction(num, den))
            return Num(Fraction(num))
        if tok.kind == "var":
            self.i += 1
            if tok.text in _ALIASES:
                return Var(_ALIASES[tok.text], True, tok)
            index = int(tok.text[1:])
            if index == 0:
                self.error("variables are numbered from x1", tok)
            return Var(index, False, tok)
        if self.accept("("):
            inner = self.poly()
            self.expect(")")
            return inner
        found = tok.text or "end of input"
        self.error(f"unexpected {found!r}")


def _variables(expr: Expr):
    if isinstance(expr, Var):
        yield expr
    elif isinstance(expr, Neg):
        yield from _variables(expr.arg)
    elif isinstance(expr, Pow):
        yield from _variables(expr.base)
    elif isinstance(expr, (Add, Mul)):
        for a in expr.args:
            yield from _variables(a)


def parse_expr(src: str, arity: int | None = None) -> ParsedExpr:
    ast = _Parser(src).parse()
    variables = list(_variables(ast))
    used = max((v.index for v in variables), default=0)
    if arity is None:
        arity = used
    elif used > arity:
        v = max(variables, key=lambda v: v.index)
        raise ArityError(
            f"variable x{v.index} exceeds declared arity {arity} "
            f"(line {v.token.line}, column {v.token.column})"
        )
    if arity > 3:
        for v in variables:
            if v.alias:
                raise ParseError(
                    f"alias {v.token.text!r} is only allowed for arity <= 3",
                    v.token.line,
                    v.token.column,
                )
    return ParsedExpr(src, arity, ast)


def evaluate(expr: Expr, arity: int) -> MPoly:
    if isinstance(expr, Num):
        return MPoly.constant(arity, expr.value)
    if isinstance(expr, Var):
        return MPoly.var(arity, expr.index)
    if isinstance(expr, Neg):
        return -evaluate(expr.arg, arity)
    if isinstance(expr, Add):
        total = MPoly.zero(arity)
        for a in expr.args:
            total = total + evaluate(a, arity)
        return total
    if isinstance(expr, Mul):
        total = MPoly.one(arity)
        for a in expr.args:
            total = total * evaluate(a, arity)
        return total
    if isinstance(expr, Pow):
        return evaluate(expr.base, arity) ** expr.exp
    raise TypeError(f"unknown node {expr!r}")


def parse_poly(src: str, arity: int | None = None) -> MPoly:
    """Parse ``src`` into an :class:`MPoly`; arity defaults to the largest variable index."""
    parsed = parse_expr(src, arity)
    return evaluate(parsed.ast, parsed.arity)
