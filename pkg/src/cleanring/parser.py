"""Reading and writing rational-function expressions in ``t``.

Grammar (ASCII, usual precedence, ``^`` binds tightest and is right
associative, unary minus binds looser than ``^``)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | "t" | "(" expr ")"

Integer literals are read in the active field, so over GF(p) they reduce
mod p. The printer emits strings in the same grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .fields import Field
from .poly import Poly
from .ratfunc import RatFunc


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "t", "op", "end"
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(t)|([-+*/^()]))")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad, text)
        num, var, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(Token("int", num, start))
        elif var is not None:
            tokens.append(Token("t", var, start))
        else:
            tokens.append(Token("op", op, start))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


_BINARY = {"+": 10, "-": 10, "*": 20, "/": 20}


class _Parser:
    def __init__(self, text: str, field: Field):
        self.text = text
        self.field = field
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def expect(self, value: str) -> Token:
        if self.tok.kind != "op" or self.tok.value != value:
            found = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")
        return self.advance()

    def parse(self) -> RatFunc:
        value = self.binary(0)
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.value!r}")
        return value

    def binary(self, min_prec: int) -> RatFunc:
        left = self.unary()
        while self.tok.kind == "op" and _BINARY.get(self.tok.value, -1) > min_prec:
            op_tok = self.advance()
            right = self.binary(_BINARY[op_tok.value])
            left = self.combine(op_tok, left, right)
        return left

    def combine(self, op_tok: Token, left: RatFunc, right: RatFunc) -> RatFunc:
        op = op_tok.value
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return left * right
        if right.is_zero():
            raise ZeroDivisionError(f"division by zero at position {op_tok.pos}")
        return left / right

    def unary(self) -> RatFunc:
        if self.tok.kind == "op" and self.tok.value in "+-":
            sign = self.advance().value
            operand = self.unary()
            return -operand if sign == "-" else operand
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.value == "^":
            caret = self.advance()
            negative = False
            if self.tok.kind == "op" and self.tok.value == "-":
                self.advance()
                negative = True
            if self.tok.kind != "int":
                raise self.error("exponent must be an integer literal")
            k = int(self.advance().value)
            if self.tok.kind == "op" and self.tok.value == "^":
                raise self.error("chained exponents are not supported")
            if negative:
                if base.is_zero():
                    raise ZeroDivisionError(f"negative power of zero at position {caret.pos}")
                k = -k
            return base**k
        return base

    def atom(self) -> RatFunc:
        tok = self.tok
        if tok.kind == "int":
            self.advance()
            return RatFunc.constant(self.field, int(tok.value))
        if tok.kind == "t":
            self.advance()
            return RatFunc.t(self.field)
        if tok.kind == "op" and tok.value == "(":
            self.advance()
            inner = self.binary(0)
            self.expect(")")
            return inner
        found = tok.value or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_ratfunc(text: str, field: Field) -> RatFunc:
    """Parse ``text`` into a canonical :class:`RatFunc` over ``field``."""
    return _Parser(text, field).parse()


def _monomial(k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return "t"
    return f"t^{k}"


def format_term(field: Field, c, k: int) -> tuple[bool, str]:
    """Return ``(negative, text)`` for the term ``c * t^k`` with ``c != 0``."""
    if field.is_finite():
        negative, mag = False, field.format(c)
    else:
        negative, mag = c < 0, field.format(abs(c))
    mono = _monomial(k)
    if not mono:
        return negative, mag
    if mag == "1":
        return negative, mono
    return negative, f"{mag}*{mono}"


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        negative, text = format_term(p.field, c, k)
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts)


_ATOMIC = re.compile(r"^(?:\d+|t|t\^\d+)$")


def _wrap(s: str) -> str:
    return s if _ATOMIC.match(s) else f"({s})"


def format_ratfunc(f: RatFunc) -> str:
    if f.is_polynomial():
        return format_poly(f.num)
    num = format_poly(f.num)
    # A leading unary minus on an atomic numerator still parses as (-num)/den.
    num = num if num.startswith("-") and _ATOMIC.match(num[1:]) else _wrap(num)
    return f"{num}/{_wrap(format_poly(f.den))}"
