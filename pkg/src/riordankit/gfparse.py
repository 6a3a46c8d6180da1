"""A small expression language for generating functions.

Grammar (whitespace insignificant, offsets are byte positions)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-')? atom ('^' int)?
    atom   := int | 'x' | '(' expr ')' | func '(' expr ')'
    func   := 'sqrt' | 'exp' | 'log'

Precedence is ``^`` above unary minus above ``*``/``/`` above ``+``/``-``,
so ``-x^2`` is ``-(x^2)`` and ``3/2^2`` is ``3/4``.  Rational constants are
written with the division operator (``1/2``); the evaluator folds them
exactly.  Implicit multiplication (``2x``) is rejected on purpose.

:func:`parse` produces a small AST, :func:`eval_expr` turns an AST into a
:class:`~riordankit.series.Series` at a requested order and kind, and
:func:`unparse` renders a canonical, fully parenthesized form that parses
back to an equivalent expression.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ComputationError, PreconditionError
from .series import OGF, Series, exp_series, log_series, sqrt_series

Span = tuple[int, int]

FUNCTIONS = ("sqrt", "exp", "log")


class ParseError(ValueError):
    """Syntax error, with the byte offset where parsing failed."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class EvalError(PreconditionError):
    """A series precondition failed while evaluating a subexpression."""

    def __init__(self, message: str, span: Span, snippet: str | None = None):
        where = f" in {snippet!r}" if snippet else ""
        super().__init__(f"{message}{where} (offsets {span[0]}..{span[1]})")
        self.span = span
        self.snippet = snippet


# ----- AST ------------------------------------------------------------------

@dataclass(frozen=True)
class GfExpr:
    span: Span = field(default=(0, 0), kw_only=True, compare=False, repr=False)


@dataclass(frozen=True)
class Num(GfExpr):
    value: Fraction


@dataclass(frozen=True)
class Var(GfExpr):
    pass


@dataclass(frozen=True)
class Neg(GfExpr):
    arg: GfExpr


@dataclass(frozen=True)
class Add(GfExpr):
    left: GfExpr
    right: GfExpr


@dataclass(frozen=True)
class Sub(GfExpr):
    left: GfExpr
    right: GfExpr


@dataclass(frozen=True)
class Mul(GfExpr):
    left: GfExpr
    right: GfExpr


@dataclass(frozen=True)
class Div(GfExpr):
    left: GfExpr
    right: GfExpr


@dataclass(frozen=True)
class Pow(GfExpr):
    base: GfExpr
    exponent: int


@dataclass(frozen=True)
class Call(GfExpr):
    func: str
    arg: GfExpr


# ----- lexer ----------------------------------------------------------------

_OPS = set("+-*/^()")


@dataclass(frozen=True)
class _Token:
    kind: str          # "int" | "x" | "func" | one of the operator characters | "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            word = text[i:j]
            if word == "x":
                tokens.append(_Token("x", word, i))
            elif word in FUNCTIONS:
                tokens.append(_Token("func", word, i))
            else:
                raise ParseError(f"unknown identifier {word!r}", i)
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


# ----- parser ---------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.pos)
        return self.advance()

    def parse(self) -> GfExpr:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"trailing input {tok.text!r}", tok.pos)
        return node

    def expr(self) -> GfExpr:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            span = (node.span[0], rhs.span[1])
            node = (Add if op.kind == "+" else Sub)(node, rhs, span=span)
        return node

    def term(self) -> GfExpr:
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.factor()
            span = (node.span[0], rhs.span[1])
            node = (Mul if op.kind == "*" else Div)(node, rhs, span=span)
        return node

    def factor(self) -> GfExpr:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            inner = self.powered()
            return Neg(inner, span=(tok.pos, inner.span[1]))
        return self.powered()

    def powered(self) -> GfExpr:
        node = self.atom()
        if self.peek().kind == "^":
            self.advance()
            sign = 1
            if self.peek().kind == "-":
                self.advance()
                sign = -1
            tok = self.expect("int", "an integer exponent")
            end = tok.pos + len(tok.text)
            node = Pow(node, sign * int(tok.text), span=(node.span[0], end))
        return node

    def atom(self) -> GfExpr:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return Num(Fraction(int(tok.text)), span=(tok.pos, tok.pos + len(tok.text)))
        if tok.kind == "x":
            self.advance()
            return Var(span=(tok.pos, tok.pos + 1))
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            close = self.peek()
            if close.kind != ")":
                raise ParseError("unbalanced parenthesis", close.pos)
            self.advance()
            return node
        if tok.kind == "func":
            self.advance()
            open_tok = self.peek()
            if open_tok.kind != "(":
                raise ParseError(f"expected '(' after {tok.text}", open_tok.pos)
            self.advance()
            arg = self.expr()
            close = self.peek()
            if close.kind != ")":
                raise ParseError("unbalanced parenthesis", close.pos)
            self.advance()
            return Call(tok.text, arg, span=(tok.pos, close.pos + 1))
        raise ParseError(f"expected a value, got {tok.text!r}" if tok.text
                         else "unexpected end of input", tok.pos)


def parse(text: str) -> GfExpr:
    """Parse an expression; raises :class:`ParseError` with a byte offset."""
    return _Parser(text).parse()


# ----- evaluation -----------------------------------------------------------

def eval_expr(expr: GfExpr, order: int, kind: str = OGF,
              source: str | None = None) -> Series:
    """Evaluate an AST into a Series of the given order and kind.

    Precondition failures inside series arithmetic are re-raised as
    :class:`EvalError` tagged with the offending node's source span.
    """
    if order < 1:
        raise PreconditionError("order must be at least 1")

    def snippet(node: GfExpr) -> str | None:
        if source is None:
            return None
        a, b = node.span
        return source[a:b]

    def ev(node: GfExpr) -> Series:
        if isinstance(node, Num):
            return Series.constant(node.value, order, kind)
        if isinstance(node, Var):
            return Series.x(order, kind)
        if isinstance(node, Neg):
            return -ev(node.arg)
        if isinstance(node, (Add, Sub, Mul, Div)):
            left = ev(node.left)
            right = ev(node.right)
            try:
                if isinstance(node, Add):
                    return left + right
                if isinstance(node, Sub):
                    return left - right
                if isinstance(node, Mul):
                    return left * right
                return left.div(right)
            except ComputationError as exc:
                raise EvalError(str(exc), node.span, snippet(node)) from exc
        if isinstance(node, Pow):
            base = ev(node.base)
            try:
                return base ** node.exponent
            except ComputationError as exc:
                raise EvalError(str(exc), node.span, snippet(node)) from exc
        if isinstance(node, Call):
            arg = ev(node.arg)
            fn = {"sqrt": sqrt_series, "exp": exp_series, "log": log_series}[node.func]
            try:
                return fn(arg)
            except ComputationError as exc:
                raise EvalError(str(exc), node.span, snippet(node)) from exc
        raise TypeError(f"not a GfExpr node: {node!r}")

    return ev(expr)


def evaluate(text: str, order: int, kind: str = OGF) -> Series:
    """Parse and evaluate in one step."""
    return eval_expr(parse(text), order, kind, source=text)


def unparse(expr: GfExpr) -> str:
    """Canonical fully parenthesized rendering; reparsing yields an
    expression that evaluates identically."""
    if isinstance(expr, Num):
        return str(expr.value) if expr.value >= 0 else f"({expr.value})"
    if isinstance(expr, Var):
        return "x"
    if isinstance(expr, Neg):
        return f"(-{unparse(expr.arg)})"
    if isinstance(expr, Add):
        return f"({unparse(expr.left)}+{unparse(expr.right)})"
    if isinstance(expr, Sub):
        return f"({unparse(expr.left)}-{unparse(expr.right)})"
    if isinstance(expr, Mul):
        return f"({unparse(expr.left)}*{unparse(expr.right)})"
    if isinstance(expr, Div):
        return f"({unparse(expr.left)}/{unparse(expr.right)})"
    if isinstance(expr, Pow):
        return f"({unparse(expr.base)}^{expr.exponent})"
    if isinstance(expr, Call):
        return f"{expr.func}({unparse(expr.arg)})"
    raise TypeError(f"not a GfExpr node: {expr!r}")
