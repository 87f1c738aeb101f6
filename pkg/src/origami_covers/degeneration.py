"""Rediscovery pipeline: degenerate covers of the nodal cubic and the
first-order deformation that recovers the smooth family.

The route: normalize the degenerate source y^2 = x^(2g)(x+1) and the nodal
cubic y^2 = x^3 + x^2 to projective lines, connect them by the unique (up to
conjugation) degree-(2g-1) map of the line with exactly two branch points,
and close the square to a cover of nodal curves.  Perturbing the curve and
map coefficients at first order in t and solving the resulting linear system
then produces the smooth family, whose validity is re-certified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import (
    Cover,
    CoverMap,
    HyperellipticCurve,
    verify_cover_identity,
)
from .errors import (
    DeformationFailed,
    FirstOrderOnly,
    InvalidDegree,
    InvalidGenus,
    PipelineError,
)
from .family import FamilyInstance, legendre_curve
from .linalg import LinearSolution, LinearSystem, solve_exact
from .poly import Poly, t_constant, t_linear
from .ratfunc import RatFunc

UVAR = "u"
ZVAR = "z"


@dataclass(frozen=True)
class ParametrizedCurve:
    """A normalization map u -> (x(u), y(u)) from the line to a nodal curve."""

    x_of_u: Poly
    y_of_u: Poly

    def satisfies(self, rhs: Poly) -> bool:
        """Check y(u)^2 = rhs(x(u)) as a polynomial identity."""
        return self.y_of_u * self.y_of_u == rhs.compose(self.x_of_u)


def nodal_cubic_rhs() -> Poly:
    return Poly([0, 0, 1, 1])  # x^3 + x^2


def degenerate_source_rhs(g: int) -> Poly:
    """x^(2g)(x+1), the right-hand side of the genus-0 degenerate source."""
    return Poly.variable() ** (2 * g) * Poly([1, 1])


def normalize_nodal_cubic() -> ParametrizedCurve:
    """u -> (u^2 - 1, u^3 - u), the normalization of y^2 = x^3 + x^2."""
    u = Poly.variable(UVAR)
    curve = ParametrizedCurve(x_of_u=u * u - 1, y_of_u=u**3 - u)
    if not curve.satisfies(nodal_cubic_rhs()):
        raise PipelineError("nodal cubic normalization failed its identity")
    return curve


def normalize_degenerate_source(g: int) -> ParametrizedCurve:
    """u -> (u^2 - 1, u (u^2 - 1)^g), normalizing y^2 = x^(2g)(x+1)."""
    _check_genus(g)
    u = Poly.variable(UVAR)
    curve = ParametrizedCurve(x_of_u=u * u - 1, y_of_u=u * (u * u - 1) ** g)
    if not curve.satisfies(degenerate_source_rhs(g)):
        raise PipelineError("degenerate source normalization failed its identity")
    return curve


def _check_genus(g: int):
    if not isinstance(g, int) or g < 2:
        raise InvalidGenus(f"genus must be an integer >= 2, got {g!r}")


def two_branch_map(n: int) -> RatFunc:
    """The degree-n self-map of the line fixing +-1 and branched only there.

    Conjugating z -> z^n by the involution z -> (1+z)/(1-z) gives
    ((1+z)^n - (1-z)^n) / ((1+z)^n + (1-z)^n), reduced.
    """
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise InvalidDegree(f"degree must be an odd positive integer, got {n!r}")
    z = Poly.variable(ZVAR)
    plus = (1 + z) ** n
    minus = (1 - z) ** n
    return RatFunc(plus - minus, plus + minus)


def _map_polys(g: int):
    """Even/odd split of the two-branch map, pushed down to the x-line.

    On the degenerate source, z = y/x^g satisfies z^2 = x + 1, so the
    odd numerator z*N1(z^2) and even denominator D1(z^2) of the two-branch
    map become A(x) = N1(x+1) and B(x) = D1(x+1).
    """
    tbm = two_branch_map(2 * g - 1)
    num, den = tbm.num, tbm.den
    if any(c for c in num.coeffs[0::2]) or any(c for c in den.coeffs[1::2]):
        raise PipelineError("two-branch map lost its odd/even symmetry")
    x_plus_1 = Poly([1, 1])
    a = Poly([])
    for i, c in enumerate(num.coeffs[1::2]):
        a = a + c * x_plus_1**i
    b = Poly([])
    for i, c in enumerate(den.coeffs[0::2]):
        b = b + c * x_plus_1**i
    return a, b


def degenerate_cover(g: int) -> Cover:
    """The cover y^2 = x^(2g)(x+1) -> y^2 = x^3 + x^2 closing the square."""
    _check_genus(g)
    a, b = _map_polys(g)
    x = Poly.variable()
    x_plus_1 = Poly([1, 1])
    # w = z*A/B with z^2 = x+1; the target point is (w^2 - 1, w^3 - w).
    f1_num = x_plus_1 * a * a - b * b
    f1 = RatFunc(f1_num, b * b)
    f2 = RatFunc(a * f1_num, x**g * b**3)
    cover = Cover(
        source=HyperellipticCurve(degenerate_source_rhs(g)),
        target=HyperellipticCurve(nodal_cubic_rhs()),
        map=CoverMap(f1=f1, f2=f2),
        degree=2 * g - 1,
    )
    if not verify_cover_identity(cover):
        raise PipelineError(f"degenerate cover identity failed at genus {g}")
    return cover


def pipeline_closure(g: int) -> bool:
    """Check the commutative square behind :func:`degenerate_cover`.

    Composing the nodal-cubic normalization with the two-branch map must
    agree with composing the degenerate cover with the source normalization,
    coordinate by coordinate, as identities in the line parameter.
    """
    _check_genus(g)
    source_norm = normalize_degenerate_source(g)
    normalize_nodal_cubic()
    tbm = two_branch_map(2 * g - 1)
    u = Poly.variable(UVAR)
    w = tbm.compose(u)
    cover = degenerate_cover(g)
    x_route = cover.map.f1.compose(source_norm.x_of_u)
    y_route = cover.map.f2.compose(source_norm.x_of_u) * source_norm.y_of_u
    return x_route == w * w - 1 and y_route == w**3 - w


# -- first-order deformation ----------------------------------------------


@dataclass(frozen=True)
class DeformationAnsatz:
    """Unknown layout for the first-order perturbation at a given genus.

    Curve unknowns multiply t*x^i for every source coefficient below the two
    leading ones; map unknowns perturb each denominator coefficient and each
    non-leading numerator coefficient of the degenerate map at order t.
    """

    genus: int
    curve_unknowns: tuple
    den_unknowns: tuple
    num_unknowns: tuple

    @property
    def unknowns(self) -> tuple:
        return self.curve_unknowns + self.den_unknowns + self.num_unknowns

    @property
    def map_unknowns(self) -> tuple:
        return self.den_unknowns + self.num_unknowns


def deformation_ansatz(g: int) -> DeformationAnsatz:
    _check_genus(g)
    if g == 2:
        # The classical letters of the degree-3 computation.
        return DeformationAnsatz(2, ("a", "b", "c", "d"), ("e", "f"), ("g",))
    return DeformationAnsatz(
        genus=g,
        curve_unknowns=tuple(f"a{i}" for i in range(1, 2 * g + 1)),
        den_unknowns=tuple(f"e{i}" for i in range(g - 1, -1, -1)),
        num_unknowns=tuple(f"n{i}" for i in range(g - 2, -1, -1)),
    )


def _perturbed_pieces(g: int, values: dict):
    """Tower-polynomial source curve, map numerator factor, and map
    denominator for a numeric assignment of the ansatz unknowns."""
    ansatz = deformation_ansatz(g)
    a_poly, b_poly = _map_polys(g)
    # Source: x^(2g+1) + (1 + a_1 t) x^(2g) + a_2 t x^(2g-1) + ... + a_2g t x.
    coeffs = [t_constant(0)] * (2 * g + 2)
    coeffs[2 * g + 1] = t_constant(1)
    for i, name in enumerate(ansatz.curve_unknowns, start=1):
        base = Fraction(1) if i == 1 else Fraction(0)
        coeffs[2 * g + 1 - i] = t_linear(base, values[name])
    source = Poly(coeffs)
    # Denominator B with every coefficient perturbed, highest degree first.
    den_coeffs = [t_constant(c) for c in b_poly.coeffs]
    for name, deg in zip(ansatz.den_unknowns, range(g - 1, -1, -1)):
        den_coeffs[deg] = t_linear(b_poly.coefficient(deg), values[name])
    den = Poly(den_coeffs)
    # Numerator factor A with non-leading coefficients perturbed.
    num_coeffs = [t_constant(c) for c in a_poly.coeffs]
    for name, deg in zip(ansatz.num_unknowns, range(g - 2, -1, -1)):
        num_coeffs[deg] = t_linear(a_poly.coefficient(deg), values[name])
    num = Poly(num_coeffs)
    return source, num, den


def _order_t_residual(g: int, values: dict) -> Poly:
    """Coefficient of t^1 in the cleared cover identity, as a Q[x] polynomial.

    The t^0 part is asserted to vanish (the degenerate cover is valid), and
    the t^1 part is affine in the unknown values.
    """
    source, num_factor, den = _perturbed_pieces(g, values)
    x = Poly([t_constant(0), t_constant(1)])
    big_x = x ** (2 * g - 1)
    n_full = x ** (g - 1) * num_factor
    den_sq = den * den
    t_sym = Poly([Poly([0, 1], var="t")])
    residual = n_full * n_full * source - big_x * (big_x + den_sq) * (
        big_x + t_sym * den_sq
    )
    t0 = residual.map_coefficients(
        lambda c: c.coefficient(0) if isinstance(c, Poly) else c
    )
    assert not t0, "degenerate cover identity broke at order t^0"
    return residual.map_coefficients(
        lambda c: c.coefficient(1) if isinstance(c, Poly) else Fraction(0)
    )


def assemble_deformation_system(g: int) -> LinearSystem:
    """Equate each t*x^i coefficient of the perturbed identity to zero."""
    ansatz = deformation_ansatz(g)
    zero = {name: Fraction(0) for name in ansatz.unknowns}
    base = _order_t_residual(g, zero)
    columns = []
    max_deg = base.degree() if base else -1
    for name in ansatz.unknowns:
        probe = dict(zero, **{name: Fraction(1)})
        col = _order_t_residual(g, probe) - base
        columns.append(col)
        if col:
            max_deg = max(max_deg, col.degree())
    n_rows = int(max_deg) + 1 if max_deg >= 0 else 0
    matrix = [
        [col.coefficient(i) for col in columns] for i in range(n_rows)
    ]
    rhs = [-base.coefficient(i) for i in range(n_rows)]
    return LinearSystem(matrix, rhs)


@dataclass(frozen=True)
class DeformationReport:
    genus: int
    ansatz: DeformationAnsatz
    rows: int
    cols: int
    solution: dict
    nullity: int
    exact: bool


def solve_deformation(g: int):
    """Solve the order-t system; returns (ansatz, system, LinearSolution).

    When the solution space allows it, the representative with every map
    perturbation equal to zero is preferred: the map of the smooth family is
    expected to coincide with the degenerate map.  The reported nullity is
    that of the unpinned system.
    """
    ansatz = deformation_ansatz(g)
    system = assemble_deformation_system(g)
    outcome = solve_exact(system)
    n_curve = len(ansatz.curve_unknowns)
    if outcome.consistent and outcome.nullity > 0 and ansatz.map_unknowns:
        pin_rows = []
        pin_rhs = []
        for col in range(n_curve, system.cols):
            row = [Fraction(0)] * system.cols
            row[col] = Fraction(1)
            pin_rows.append(row)
            pin_rhs.append(Fraction(0))
        pinned = LinearSystem(
            list(system.matrix) + pin_rows, list(system.rhs) + pin_rhs
        )
        pinned_outcome = solve_exact(pinned)
        if pinned_outcome.consistent:
            outcome = LinearSolution(
                consistent=True,
                solution=pinned_outcome.solution,
                nullity=outcome.nullity,
                rank=outcome.rank,
                free_columns=outcome.free_columns,
            )
    return ansatz, system, outcome


def deform(g: int, solution: dict | None = None) -> FamilyInstance:
    """Globalize the first-order solution and certify it exactly.

    The candidate curve takes the solved coefficients; the map is kept at its
    unperturbed (t = 0) value.  Exactness is certified by the full symbolic
    cover identity, not just at order t.
    """
    _check_genus(g)
    ansatz = deformation_ansatz(g)
    if solution is None:
        _, _, outcome = solve_deformation(g)
        if not outcome.consistent:
            raise DeformationFailed(f"order-t system inconsistent at genus {g}")
        solution = dict(zip(ansatz.unknowns, outcome.solution))
    source, _, _ = _perturbed_pieces(g, solution)
    a_poly, b_poly = _map_polys(g)
    x = Poly.variable()
    f1 = RatFunc(x ** (2 * g - 1), b_poly * b_poly)
    f2 = RatFunc(x ** (g - 1) * a_poly, b_poly**3)
    cover = Cover(
        source=HyperellipticCurve(source),
        target=legendre_curve(),
        map=CoverMap(f1=f1, f2=f2),
        degree=2 * g - 1,
    )
    if not verify_cover_identity(cover):
        raise FirstOrderOnly(
            f"first-order deformation did not globalize at genus {g}"
        )
    return FamilyInstance(genus=g, j=b_poly, k=a_poly, cover=cover)


def deformation_report(g: int) -> DeformationReport:
    """Full pipeline summary for machine-readable output."""
    ansatz, system, outcome = solve_deformation(g)
    if not outcome.consistent:
        raise DeformationFailed(f"order-t system inconsistent at genus {g}")
    solution = dict(zip(ansatz.unknowns, outcome.solution))
    try:
        deform(g, solution=solution)
        exact = True
    except FirstOrderOnly:
        exact = False
    return DeformationReport(
        genus=g,
        ansatz=ansatz,
        rows=system.rows,
        cols=system.cols,
        solution=solution,
        nullity=outcome.nullity,
        exact=exact,
    )
