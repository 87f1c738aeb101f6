"""Hyperelliptic curves y^2 = p(x), covers (x,y) -> (f1(x), f2(x)*y), and the
certification of their ramification via the pulled-back invariant differential.

Curves live either over Q (rational coefficients) or over Q[t] (coefficients
polynomial in the parameter t); the cover maps themselves always have rational
coefficients, matching the parameter-independence of the family.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidCover, InvalidCurve, ParseError, UnsupportedShape
from .parsing import format_poly, format_ratfunc, parse_poly, parse_ratfunc
from .poly import (
    Poly,
    as_tower,
    is_t_free,
    lift_to_tower,
    lower_from_tower,
    squarefree_part,
    substitute_t,
)
from .ratfunc import RatFunc


@dataclass(frozen=True)
class HyperellipticCurve:
    """The affine curve y^2 = rhs(x)."""

    rhs: Poly

    def __post_init__(self):
        if not self.rhs:
            raise InvalidCurve("curve right-hand side must be nonzero")

    def is_over_q(self) -> bool:
        return is_t_free(as_tower(self.rhs))

    def __eq__(self, other):
        if not isinstance(other, HyperellipticCurve):
            return NotImplemented
        return self.rhs == other.rhs


@dataclass(frozen=True)
class CoverMap:
    """The map (x, y) -> (f1(x), f2(x)*y)."""

    f1: RatFunc
    f2: RatFunc


@dataclass(frozen=True)
class Cover:
    source: HyperellipticCurve
    target: HyperellipticCurve
    map: CoverMap
    degree: int


@dataclass(frozen=True)
class CoverCertificate:
    """Result of the formal cover-identity check, with printable witnesses."""

    ok: bool
    lhs: str
    rhs: str

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class RamificationReport:
    branch_point_x: Fraction
    ramification_index: int
    pullback_coefficient: RatFunc
    vanishing_order_at_origin: int
    riemann_hurwitz_balanced: bool


def genus_arithmetic(curve: HyperellipticCurve) -> int:
    """Genus determined by the degree of the Weierstrass right-hand side."""
    deg = curve.rhs.degree()
    if deg < 3:
        raise InvalidCurve(f"degree {deg} < 3")
    return (int(deg) - 1) // 2


def genus_geometric(curve: HyperellipticCurve) -> int:
    """Genus of the smooth model: replace rhs by its squarefree part."""
    if not curve.is_over_q():
        raise InvalidCurve("geometric genus requires a curve over Q")
    rhs = lower_from_tower(as_tower(curve.rhs))
    reduced = squarefree_part(rhs)
    deg = reduced.degree()
    if deg <= 0:
        return 0
    return (int(deg) - 1) // 2


def specialize_t(curve: HyperellipticCurve, value) -> HyperellipticCurve:
    """Substitute t := value into every coefficient."""
    return HyperellipticCurve(substitute_t(as_tower(curve.rhs), value))


def _lift_ratfunc_parts(r: RatFunc):
    return lift_to_tower(r.num), lift_to_tower(r.den)


def verify_cover_identity(cover: Cover) -> CoverCertificate:
    """Check f2(x)^2 * p(x) = q(f1(x)) as a formal identity.

    p is the source right-hand side and q the target right-hand side; the
    check clears all denominators and compares two polynomials in Q[t][x].
    """
    p = as_tower(cover.source.rhs)
    q = as_tower(cover.target.rhs)
    a, b = _lift_ratfunc_parts(cover.map.f1)
    n, d = _lift_ratfunc_parts(cover.map.f2)
    m = int(q.degree())
    # q(f1) with f1 = a/b has denominator b^m after clearing.
    q_of_f1 = Poly([], var=p.var)
    for i in range(m + 1):
        c = q.coefficient(i)
        if c:
            q_of_f1 = q_of_f1 + c * a**i * b ** (m - i)
    lhs = n * n * p * b**m
    rhs = q_of_f1 * d * d
    return CoverCertificate(
        ok=(lhs - rhs) == 0,
        lhs=format_poly(lhs),
        rhs=format_poly(rhs),
    )


def pullback_invariant_differential(cover: Cover) -> RatFunc:
    """Coefficient lambda(x) of dx/y in the pullback of dx/y on the target.

    With y_target = f2(x) * y_source this is f1'(x) / f2(x), reduced.
    """
    if not cover.map.f2:
        raise InvalidCover("second map component is zero")
    return cover.map.f1.derivative() / cover.map.f2


def ramification_report(cover: Cover) -> RamificationReport:
    """Certify the family's ramification shape at the origin.

    Requires the pullback coefficient to be a pure monomial c*x^m; that shape
    means the pulled-back differential vanishes only above x = 0, so a single
    branch point accounts for the whole Riemann-Hurwitz budget.
    """
    lam = pullback_invariant_differential(cover)
    if not lam.is_poly():
        raise UnsupportedShape("pullback coefficient is not a polynomial")
    lam_poly = lam.as_poly()
    nonzero = [e for e, c in enumerate(lam_poly.coeffs) if c]
    if len(nonzero) != 1:
        raise UnsupportedShape("pullback coefficient is not a monomial")
    m = nonzero[0]
    f1 = cover.map.f1
    if not f1.den.coefficient(0):
        raise UnsupportedShape("map denominator vanishes at the origin")
    index = next(e for e, c in enumerate(f1.num.coeffs) if c)
    if index < 1:
        raise UnsupportedShape("first map component does not vanish at the origin")
    g_source = genus_arithmetic(cover.source)
    g_target = genus_arithmetic(cover.target)
    balanced = (
        2 * g_source - 2
        == cover.degree * (2 * g_target - 2) + (index - 1)
    )
    return RamificationReport(
        branch_point_x=Fraction(0),
        ramification_index=index,
        pullback_coefficient=lam,
        vanishing_order_at_origin=2 * m,
        riemann_hurwitz_balanced=balanced,
    )


# -- JSON interchange ------------------------------------------------------


def cover_to_dict(cover: Cover) -> dict:
    return {
        "source_rhs": format_poly(as_tower(cover.source.rhs)),
        "target_rhs": format_poly(as_tower(cover.target.rhs)),
        "f1": format_ratfunc(cover.map.f1),
        "f2": format_ratfunc(cover.map.f2),
        "degree": cover.degree,
    }


def cover_to_json(cover: Cover) -> str:
    return json.dumps(cover_to_dict(cover), indent=2)


def cover_from_dict(doc: dict) -> Cover:
    required = ["source_rhs", "target_rhs", "f1", "f2", "degree"]
    for key in required:
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    def _poly_field(key):
        try:
            return parse_poly(doc[key])
        except ParseError as exc:
            raise ParseError(f"field {key!r}: {exc}") from exc
    def _ratfunc_field(key):
        try:
            return parse_ratfunc(doc[key])
        except ParseError as exc:
            raise ParseError(f"field {key!r}: {exc}") from exc
    degree = doc["degree"]
    if not isinstance(degree, int) or degree < 1:
        raise ParseError("field 'degree': must be a positive integer")
    return Cover(
        source=HyperellipticCurve(_poly_field("source_rhs")),
        target=HyperellipticCurve(_poly_field("target_rhs")),
        map=CoverMap(f1=_ratfunc_field("f1"), f2=_ratfunc_field("f2")),
        degree=degree,
    )


def cover_from_json(text: str) -> Cover:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("cover document must be a JSON object")
    return cover_from_dict(doc)
