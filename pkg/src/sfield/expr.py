"""Lexer, parser and evaluator for S-field expressions.

Grammar (lowest to highest precedence)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | atom
    atom    := NUMBER | 'A' | '(' expr ')' | '(' expr ',' expr ')'

Both binary levels associate to the left.  For ``*`` this matters: the
product is not associative, so ``a*b*c`` always means ``(a*b)*c``.
Rational literals are written as divisions of integers, e.g. ``7/4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import core
from .core import SElement
from .division import divide
from .errors import DivisionError, NotAScalar, SFieldError
from .scalar import Ring

NUMBER = "NUMBER"
SYMBOL_A = "SYMBOL_A"
PLUS = "PLUS"
MINUS = "MINUS"
STAR = "STAR"
SLASH = "SLASH"
LPAREN = "LPAREN"
RPAREN = "RPAREN"
COMMA = "COMMA"
EOF = "EOF"

_SINGLE = {
    "+": PLUS,
    "-": MINUS,
    "*": STAR,
    "·": STAR,
    "/": SLASH,
    "(": LPAREN,
    ")": RPAREN,
    ",": COMMA,
    "A": SYMBOL_A,
}

_DISPLAY = {
    NUMBER: "number",
    SYMBOL_A: "'A'",
    PLUS: "'+'",
    MINUS: "'-'",
    STAR: "'*'",
    SLASH: "'/'",
    LPAREN: "'('",
    RPAREN: "')'",
    COMMA: "','",
    EOF: "end of input",
}


class ExprError(SFieldError):
    """An error tied to a span of the source text (character offsets)."""

    def __init__(self, message: str, start: int, end: int | None = None):
        super().__init__(message)
        self.message = message
        self.start = start
        self.end = start + 1 if end is None else end


class LexError(ExprError):
    pass


class ParseError(ExprError):
    def __init__(self, message: str, start: int, end: int | None = None, expected=()):
        super().__init__(message, start, end)
        self.expected = tuple(expected)


class EvalError(ExprError):
    def __init__(self, message: str, start: int, end: int, cause: Exception | None = None):
        super().__init__(message, start, end)
        self.cause = cause

    @property
    def reason(self) -> str:
        if isinstance(self.cause, DivisionError):
            return self.cause.reason
        return type(self.cause).__name__ if self.cause else "EvalError"


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token(NUMBER, text[i:j], i))
            i = j
        elif c in _SINGLE:
            tokens.append(Token(_SINGLE[c], c, i))
            i += 1
        else:
            raise LexError(f"unexpected character {c!r}", i)
    tokens.append(Token(EOF, "", n))
    return tokens


# -- syntax tree -----------------------------------------------------------------

@dataclass(frozen=True)
class ScalarLiteral:
    value: int
    start: int
    end: int


@dataclass(frozen=True)
class PairLiteral:
    x: "Expr"
    y: "Expr"
    start: int
    end: int


@dataclass(frozen=True)
class BaseUnit:
    start: int
    end: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    start: int
    end: int


@dataclass(frozen=True)
class BinOp:
    left: "Expr"
    right: "Expr"
    start: int
    end: int
    grouped: bool = False

    symbol = "?"


class Add(BinOp):
    symbol = "+"


class Sub(BinOp):
    symbol = "-"


class Mul(BinOp):
    symbol = "*"


class Div(BinOp):
    symbol = "/"


Expr = Union[ScalarLiteral, PairLiteral, BaseUnit, Neg, BinOp]

_BINARY = {PLUS: Add, MINUS: Sub, STAR: Mul, SLASH: Div}


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def fail(self, expected) -> ParseError:
        tok = self.peek
        found = "end of input" if tok.kind == EOF else repr(tok.lexeme)
        names = ", ".join(_DISPLAY[k] for k in expected)
        return ParseError(f"expected {names}; found {found}", tok.position,
                          tok.position + max(len(tok.lexeme), 1), expected)

    def expect(self, kind: str) -> Token:
        if self.peek.kind != kind:
            raise self.fail([kind])
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        if self.peek.kind != EOF:
            raise self.fail([PLUS, MINUS, STAR, SLASH, EOF])
        return node

    def _left_assoc(self, operand, kinds) -> Expr:
        node = operand()
        while self.peek.kind in kinds:
            cls = _BINARY[self.advance().kind]
            right = operand()
            node = cls(node, right, node.start, right.end)
        return node

    def expr(self) -> Expr:
        return self._left_assoc(self.term, (PLUS, MINUS))

    def term(self) -> Expr:
        return self._left_assoc(self.unary, (STAR, SLASH))

    def unary(self) -> Expr:
        if self.peek.kind == MINUS:
            tok = self.advance()
            operand = self.unary()
            return Neg(operand, tok.position, operand.end)
        return self.atom()

    def atom(self) -> Expr:
        tok = self.peek
        if tok.kind == NUMBER:
            self.advance()
            return ScalarLiteral(int(tok.lexeme), tok.position, tok.position + len(tok.lexeme))
        if tok.kind == SYMBOL_A:
            self.advance()
            return BaseUnit(tok.position, tok.position + 1)
        if tok.kind == LPAREN:
            self.advance()
            first = self.expr()
            if self.peek.kind == COMMA:
                self.advance()
                second = self.expr()
                close = self.expect(RPAREN)
                return PairLiteral(first, second, tok.position, close.position + 1)
            if self.peek.kind != RPAREN:
                raise self.fail([PLUS, MINUS, STAR, SLASH, COMMA, RPAREN])
            close = self.advance()
            # Keep the inner node but widen its span to the parentheses.
            return _respan(first, tok.position, close.position + 1)
        raise self.fail([NUMBER, SYMBOL_A, LPAREN, MINUS])


def _respan(node: Expr, start: int, end: int) -> Expr:
    fields = dict(node.__dict__)
    fields.update(start=start, end=end)
    if isinstance(node, BinOp):
        fields["grouped"] = True
    return type(node)(**fields)


def parse(tokens: list[Token] | str) -> Expr:
    if isinstance(tokens, str):
        tokens = tokenize(tokens)
    return _Parser(tokens).parse()


# -- evaluation ------------------------------------------------------------------

def evaluate(node: Expr, ring: Ring) -> SElement:
    if isinstance(node, ScalarLiteral):
        # GF(p) literals reduce mod p here
        return core.embed_scalar(ring.scalar(node.value))
    if isinstance(node, BaseUnit):
        return core.base_unit(ring)
    if isinstance(node, PairLiteral):
        return SElement(_coordinate(node.x, ring), _coordinate(node.y, ring))
    if isinstance(node, Neg):
        return core.s_neg(evaluate(node.operand, ring))
    left = evaluate(node.left, ring)
    right = evaluate(node.right, ring)
    if isinstance(node, Add):
        return core.s_add(left, right)
    if isinstance(node, Sub):
        return core.s_sub(left, right)
    if isinstance(node, Mul):
        return core.s_mul(left, right)
    if isinstance(node, Div):
        outcome = divide(left, right)
        try:
            return outcome.unwrap()
        except DivisionError as exc:
            raise EvalError(f"{exc.reason}: {exc}", node.start, node.end, exc) from exc
    raise TypeError(f"unknown node {node!r}")


def _coordinate(node: Expr, ring: Ring):
    value = evaluate(node, ring)
    try:
        return core.extract_scalar(value)
    except NotAScalar as exc:
        raise EvalError(f"pair coordinate must be a scalar, got {core.render_coords(value)}",
                        node.start, node.end, exc) from exc


def evaluate_text(text: str, ring: Ring) -> SElement:
    return evaluate(parse(text), ring)


def render(s: SElement, fmt: str = "coords") -> str:
    if fmt == "coords":
        return core.render_coords(s)
    if fmt == "canonical":
        return core.render_canonical(s)
    raise ValueError(f"unknown format {fmt!r}")


def to_source(node: Expr) -> str:
    """Fully parenthesised form of a tree, showing how products were grouped."""
    if isinstance(node, ScalarLiteral):
        return str(node.value)
    if isinstance(node, BaseUnit):
        return "A"
    if isinstance(node, PairLiteral):
        return f"({to_source(node.x)}, {to_source(node.y)})"
    if isinstance(node, Neg):
        return f"-{to_source(node.operand)}"
    return f"({to_source(node.left)} {node.symbol} {to_source(node.right)})"


def longest_product_chain(node: Expr) -> int:
    """Number of factors in the longest unbroken chain of ``*``."""
    if isinstance(node, Mul):
        here = _chain_len(node)
        return max(here, longest_product_chain(node.left), longest_product_chain(node.right))
    if isinstance(node, BinOp):
        return max(longest_product_chain(node.left), longest_product_chain(node.right))
    if isinstance(node, Neg):
        return longest_product_chain(node.operand)
    if isinstance(node, PairLiteral):
        return max(longest_product_chain(node.x), longest_product_chain(node.y))
    return 1


def _chain_len(node: Expr, top: bool = True) -> int:
    if isinstance(node, Mul) and (top or not node.grouped):
        return _chain_len(node.left, False) + _chain_len(node.right, False)
    return 1
