"""
Recursive-descent parser for Laurent coefficients such as "1 - q*t^2" or
"(1 - q^2)/(q)*t + t^-3".

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' int)?
    atom   := integer | 'q' | 't' | '(' expr ')'
    int    := '-'? digits | '(' '-'? digits ')'

Unary minus binds looser than '^', so -t^2 is -(t^2). Division must be exact in A.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Union

from .exceptions import ExprParseError, NotDivisibleError
from .laurent import LaurentPoly, exact_div
from .scalars import Q, QRational


class Token(NamedTuple):
    kind: str  # "int", "name", "op", "end"
    text: str
    offset: int


@dataclass(frozen=True)
class Num:
    value: int
    offset: int


@dataclass(frozen=True)
class Var:
    name: str  # "q" or "t"
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*", "/"
    left: "Expr"
    right: "Expr"
    offset: int


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    offset: int


Expr = Union[Num, Var, Neg, BinOp, Pow]


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    raw = text.encode("utf-8")
    i = 0
    while i < len(raw):
        if raw[i] > 127:
            raise ExprParseError("unexpected character", i)
        c = chr(raw[i])
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            start = i
            while i < len(raw) and raw[i] < 128 and chr(raw[i]).isdigit():
                i += 1
            tokens.append(Token("int", raw[start:i].decode(), start))
            continue
        if c.isalpha():
            start = i
            while i < len(raw) and raw[i] < 128 and chr(raw[i]).isalnum():
                i += 1
            name = raw[start:i].decode()
            if name not in ("q", "t"):
                raise ExprParseError(f"unknown symbol {name!r}", start)
            tokens.append(Token("name", name, start))
            continue
        if c in "+-*/^()":
            tokens.append(Token("op", c, i))
            i += 1
            continue
        raise ExprParseError("unexpected character", i)
    tokens.append(Token("end", "", len(raw)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "end":
            self.pos += 1
        return token

    def accept(self, op: str) -> bool:
        token = self.peek()
        if token.kind == "op" and token.text == op:
            self.pos += 1
            return True
        return False

    def expect(self, op: str) -> None:
        if not self.accept(op):
            raise ExprParseError(f"expected {op!r}", self.peek().offset)

    def parse(self) -> Expr:
        expr = self.expr()
        token = self.peek()
        if token.kind != "end":
            raise ExprParseError(f"unexpected {token.text!r}", token.offset)
        return expr

    def expr(self) -> Expr:
        left = self.term()
        while True:
            token = self.peek()
            if token.kind == "op" and token.text in "+-":
                self.next()
                left = BinOp(token.text, left, self.term(), token.offset)
            else:
                return left

    def term(self) -> Expr:
        left = self.unary()
        while True:
            token = self.peek()
            if token.kind == "op" and token.text in "*/":
                self.next()
                left = BinOp(token.text, left, self.unary(), token.offset)
            else:
                return left

    def unary(self) -> Expr:
        token = self.peek()
        if token.kind == "op" and token.text == "-":
            self.next()
            return Neg(self.unary(), token.offset)
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        token = self.peek()
        if token.kind == "op" and token.text == "^":
            self.next()
            return Pow(base, self.exponent(), token.offset)
        return base

    def exponent(self) -> int:
        start = self.peek().offset
        parenthesized = self.accept("(")
        sign = -1 if self.accept("-") else 1
        token = self.next()
        if token.kind != "int":
            raise ExprParseError("integer exponent required", start)
        if parenthesized and not self.accept(")"):
            raise ExprParseError("integer exponent required", start)
        return sign * int(token.text)

    def atom(self) -> Expr:
        token = self.next()
        if token.kind == "int":
            return Num(int(token.text), token.offset)
        if token.kind == "name":
            return Var(token.text, token.offset)
        if token.kind == "op" and token.text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if token.kind == "end":
            raise ExprParseError("unexpected end of input", token.offset)
        raise ExprParseError(f"unexpected {token.text!r}", token.offset)


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def evaluate(expr: Expr, q: QRational = Q) -> LaurentPoly:
    """Value of expr in A, with the symbol q bound to the given scalar"""
    if isinstance(expr, Num):
        return LaurentPoly.constant(Fraction(expr.value))
    if isinstance(expr, Var):
        return LaurentPoly.constant(q) if expr.name == "q" else LaurentPoly.monomial(1)
    if isinstance(expr, Neg):
        return -evaluate(expr.operand, q)
    if isinstance(expr, Pow):
        base = evaluate(expr.base, q)
        if expr.exponent < 0 and not base.is_monomial():
            raise ExprParseError("negative exponent needs a monomial base", expr.offset)
        return base**expr.exponent
    left, right = evaluate(expr.left, q), evaluate(expr.right, q)
    if expr.op == "+":
        return left + right
    if expr.op == "-":
        return left - right
    if expr.op == "*":
        return left * right
    try:
        return exact_div(left, right)
    except NotDivisibleError:
        raise ExprParseError("division is not exact in A", expr.offset)


def parse_laurent(text: str, q: QRational = Q) -> LaurentPoly:
    return evaluate(parse_expr(text), q)
