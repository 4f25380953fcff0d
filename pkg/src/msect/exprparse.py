"""Parse and render rational-function expressions in q.

Grammar (whitespace insignificant):

    expr   := ["-"] term { ("+" | "-") term }
    term   := ["-"] factor { ("*" | "/") factor }
    factor := atom [ "^" exponent ]
    atom   := "(" expr ")" | "q" | "m" | integer

Exponents are nonnegative integer literals, the placeholder m, or a
parenthesized expression that folds to a nonnegative integer constant (so
"q^(m-1)" works once m is bound).  The placeholder m is substituted at
lexing time.  Division is evaluated symbolically over exact rational
functions, and the final denominator must not vanish at q = 0.

``render_ratfun`` is the inverse: it prints a rational function in a fixed
canonical layout ("1/(1 - q)", "1 + 2*q", "3/2*q^2") that parses back to an
equal value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, UnboundM
from .poly import P_ONE, Poly, RatFun

_Q = RatFun(Poly((0, 1)))


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "q", "+", "-", "*", "/", "^", "(", ")", "end"
    pos: int
    value: int = 0


def _lex(source: str, m_value: int | None) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(source):
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(source) and source[j].isdigit():
                j += 1
            tokens.append(_Token("int", i, int(source[i:j])))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(source) and source[j].isalpha():
                j += 1
            word = source[i:j]
            if word == "q":
                tokens.append(_Token("q", i))
            elif word == "m":
                if m_value is None:
                    raise UnboundM(i)
                tokens.append(_Token("int", i, m_value))
            else:
                raise ParseError(f"unknown identifier {word!r}", i)
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", len(source)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.at = 0

    def peek(self) -> _Token:
        return self.tokens[self.at]

    def take(self) -> _Token:
        tok = self.tokens[self.at]
        self.at += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}", tok.pos)
        return self.take()

    def expr(self) -> RatFun:
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFun:
        negate = False
        if self.peek().kind == "-":
            self.take()
            negate = True
        value = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.take().kind
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return -value if negate else value

    def factor(self) -> RatFun:
        value = self.atom()
        if self.peek().kind == "^":
            self.take()
            return value ** self.exponent()
        return value

    def exponent(self) -> int:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return tok.value
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            folded = _constant_int(inner)
            if folded is None or folded < 0:
                raise ParseError("exponent must fold to a nonnegative integer", tok.pos)
            return folded
        raise ParseError("expected integer exponent", tok.pos)

    def atom(self) -> RatFun:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return RatFun(Poly((tok.value,)))
        if tok.kind == "q":
            self.take()
            return _Q
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError("expected a number, 'q' or a parenthesized expression", tok.pos)


def _constant_int(f: RatFun) -> int | None:
    if not f.is_polynomial() or f.num.degree > 0:
        return None
    value = f.num.coefficient(0)
    if value.denominator != 1:
        return None
    return int(value)


def parse_ratfun(source: str, m_value: int | None = None) -> RatFun:
    """Evaluate an expression in q to an exact rational function."""
    parser = _Parser(_lex(source, m_value))
    value = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ParseError("unexpected trailing input", trailing.pos)
    return value


def _render_term(coeff: Fraction, power: int) -> str:
    # coeff is positive; the caller handles signs
    if power == 0:
        return str(coeff)
    var = "q" if power == 1 else f"q^{power}"
    if coeff == 1:
        return var
    return f"{coeff}*{var}"


def render_poly(p: Poly) -> str:
    """Ascending-exponent rendering, e.g. "1 + 2*q - q^3"."""
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for power, coeff in enumerate(p.coeffs):
        if not coeff:
            continue
        term = _render_term(abs(coeff), power)
        if not pieces:
            pieces.append(f"-{term}" if coeff < 0 else term)
        else:
            pieces.append(f" - {term}" if coeff < 0 else f" + {term}")
    return "".join(pieces)


def render_ratfun(f: RatFun) -> str:
    """Render so that parse_ratfun(render_ratfun(f)) == f."""
    num = render_poly(f.num)
    if f.den == P_ONE:
        return num
    terms = sum(1 for c in f.num.coeffs if c)
    if terms > 1:
        num = f"({num})"
    return f"{num}/({render_poly(f.den)})"
