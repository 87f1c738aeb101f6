"""Plain-text syntax for polynomials and rational functions.

Grammar: integer and rational literals, the main variable (``x`` unless told
otherwise), the parameter ``t``, the operators ``+ - * / ^`` and parentheses,
with ``^`` restricted to nonnegative integer literal exponents.

Printing a polynomial or rational function and parsing the result is the
identity; the printer is the single source of the canonical text form used in
the JSON interchange documents.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .poly import (
    Poly,
    TVAR,
    is_t_free,
    lower_from_tower,
    t_constant,
)
from .ratfunc import RatFunc

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|([-+*/^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} at position {pos}")
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2)))
        else:
            tokens.append(("op", m.group(3)))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Expr:
    """A quotient of two Q[t][x] polynomials built up during parsing."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c, var):
        return cls(Poly([t_constant(c)], var=var), _tower_one(var))

    def __add__(self, other):
        return _Expr(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        return _Expr(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __mul__(self, other):
        return _Expr(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not other.num:
            raise ParseError("division by zero in expression")
        return _Expr(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return _Expr(-self.num, self.den)

    def __pow__(self, n):
        return _Expr(self.num**n, self.den**n)


def _tower_one(var):
    return Poly([t_constant(1)], var=var)


class _Parser:
    def __init__(self, tokens, var):
        self.tokens = tokens
        self.pos = 0
        self.var = var

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, value = self.next()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}, found {value!r}")

    def parse(self) -> _Expr:
        expr = self.expr()
        kind, value = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input starting at {value!r}")
        return expr

    def expr(self) -> _Expr:
        value = self.term()
        while True:
            kind, op = self.peek()
            if kind == "op" and op in "+-":
                self.next()
                rhs = self.term()
                value = value + rhs if op == "+" else value - rhs
            else:
                return value

    def term(self) -> _Expr:
        value = self.unary()
        while True:
            kind, op = self.peek()
            if kind == "op" and op in "*/":
                self.next()
                rhs = self.unary()
                value = value * rhs if op == "*" else value / rhs
            else:
                return value

    def unary(self) -> _Expr:
        kind, op = self.peek()
        if kind == "op" and op == "-":
            self.next()
            return -self.unary()
        if kind == "op" and op == "+":
            self.next()
            return self.unary()
        return self.power()

    def power(self) -> _Expr:
        base = self.atom()
        kind, op = self.peek()
        if kind == "op" and op == "^":
            self.next()
            ekind, exponent = self.next()
            if ekind != "int":
                raise ParseError("exponent must be a nonnegative integer literal")
            return base**exponent
        return base

    def atom(self) -> _Expr:
        kind, value = self.next()
        if kind == "int":
            return _Expr.const(Fraction(value), self.var)
        if kind == "name":
            if value == self.var:
                return _Expr(
                    Poly([t_constant(0), t_constant(1)], var=self.var),
                    _tower_one(self.var),
                )
            if value == TVAR:
                return _Expr(
                    Poly([Poly([0, 1], var=TVAR)], var=self.var),
                    _tower_one(self.var),
                )
            raise ParseError(f"unknown variable {value!r}")
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {value!r}")


def parse_expression(text: str, var: str = "x") -> _Expr:
    if var == TVAR:
        raise ParseError("main variable cannot be 't'")
    return _Parser(_tokenize(text), var).parse()


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse a polynomial over Q or Q[t].

    Returns a plain rational-coefficient polynomial when the text does not
    mention ``t``, and a Q[t][x] tower polynomial otherwise.
    """
    expr = parse_expression(text, var)
    den = expr.den
    if den.degree() > 0 or not is_t_free(den):
        raise ParseError("expression is not a polynomial")
    scale = lower_from_tower(den).constant_value()
    num = expr.num * (1 / scale)
    if is_t_free(num):
        return lower_from_tower(num)
    return num


def parse_ratfunc(text: str, var: str = "x") -> RatFunc:
    """Parse a rational function with coefficients in Q (no ``t``)."""
    expr = parse_expression(text, var)
    if not is_t_free(expr.num) or not is_t_free(expr.den):
        raise ParseError("rational functions may not involve t")
    return RatFunc(lower_from_tower(expr.num), lower_from_tower(expr.den))


# -- printing --------------------------------------------------------------


def _format_scalar(c: Fraction) -> str:
    return str(c)


def format_tpoly(p: Poly) -> str:
    """Print a polynomial in t, lowest-degree term first."""
    if not p:
        return "0"
    pieces = []
    for e, c in enumerate(p.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = _format_scalar(c)
        else:
            tpart = "t" if e == 1 else f"t^{e}"
            body = tpart if c == 1 else f"{_format_scalar(c)}*{tpart}"
        pieces.append((sign, body))
    return _join_terms(pieces)


def _join_terms(pieces) -> str:
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _term_count(c) -> int:
    if isinstance(c, Poly):
        return sum(1 for v in c.coeffs if v)
    return 1


def format_poly(p: Poly) -> str:
    """Print a polynomial in the main variable, highest-degree term first.

    Coefficients may be rationals or polynomials in ``t``; multi-term
    t-coefficients are parenthesized, e.g. ``(1 + 9*t)*x^4``.
    """
    if not p:
        return "0"
    pieces = []
    for e in range(p.degree(), -1, -1):
        c = p.coefficient(e)
        if not c:
            continue
        xpart = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        xpart = xpart.replace("x", p.var)
        if isinstance(c, Poly) and not c.is_constant():
            if _term_count(c) == 1:
                k = c.degree()
                ck = c.coefficient(k)
                sign = "-" if ck < 0 else "+"
                ck = abs(ck)
                tpart = "t" if k == 1 else f"t^{k}"
                factors = []
                if ck != 1:
                    factors.append(_format_scalar(ck))
                factors.append(tpart)
                if xpart:
                    factors.append(xpart)
                pieces.append((sign, "*".join(factors)))
            else:
                body = f"({format_tpoly(c)})"
                pieces.append(("+", f"{body}*{xpart}" if xpart else body))
            continue
        scalar = c.constant_value() if isinstance(c, Poly) else c
        sign = "-" if scalar < 0 else "+"
        scalar = abs(scalar)
        if not xpart:
            body = _format_scalar(scalar)
        elif scalar == 1:
            body = xpart
        else:
            body = f"{_format_scalar(scalar)}*{xpart}"
        pieces.append((sign, body))
    return _join_terms(pieces)


def format_ratfunc(r: RatFunc) -> str:
    """Print a rational function; the denominator is always parenthesized."""
    if r.is_poly() and r.den == 1:
        return format_poly(r.num)
    num = format_poly(r.num)
    if _poly_term_count(r.num) > 1 or num.startswith("-"):
        num = f"({num})"
    return f"{num}/({format_poly(r.den)})"


def _poly_term_count(p: Poly) -> int:
    return sum(1 for c in p.coeffs if c)
