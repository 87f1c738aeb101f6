"""Rational functions over Q in one variable, kept in canonical reduced form.

Canonical form: numerator and denominator are coprime, and the denominator is
the primitive integer polynomial with positive leading coefficient in its
scalar class.  That normalization keeps the denominators of the covers in
their familiar expanded shapes (e.g. ``9*x^2+24*x+16`` for ``(3x+4)^2``) and
makes equality a plain representation comparison.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero
from .poly import Poly, poly_gcd


def _as_poly(value, var):
    if isinstance(value, Poly):
        return value
    return Poly.constant(value, var=var)


class RatFunc:
    """Immutable reduced fraction of two rational-coefficient polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, var="x"):
        if isinstance(num, Poly):
            var = num.var
        elif isinstance(den, Poly):
            var = den.var
        num = _as_poly(num, var)
        den = _as_poly(den, var)
        num._check_var(den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            den = Poly.constant(1, var=var)
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            content, den = den.content_and_primitive()
            num = num * (1 / content)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFunc is immutable")

    @property
    def var(self):
        return self.num.var

    def is_poly(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError("rational function is not a polynomial")
        return self.num * (1 / self.den.constant_value())

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.is_poly() and self.as_poly() == other
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    # -- field arithmetic --------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return RatFunc(other, 1, var=self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        return RatFunc(self.num**n, self.den**n)

    # -- calculus / substitution ------------------------------------------

    def derivative(self) -> "RatFunc":
        """Formal derivative by the quotient rule, reduced."""
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def compose(self, other) -> "RatFunc":
        """self(other), for a polynomial or rational-function argument."""
        other = self._coerce(other)
        num = self.num(other)
        den = self.den(other)
        num = self._coerce(num)
        den = self._coerce(den)
        if not den:
            raise DivisionByZero("composition hit a vanishing denominator")
        return num / den
