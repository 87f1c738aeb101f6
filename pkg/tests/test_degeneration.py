from fractions import Fraction

import pytest

from origami_covers.curves import verify_cover_identity
from origami_covers.degeneration import (
    assemble_deformation_system,
    deform,
    deformation_ansatz,
    deformation_report,
    degenerate_cover,
    degenerate_source_rhs,
    nodal_cubic_rhs,
    normalize_degenerate_source,
    normalize_nodal_cubic,
    pipeline_closure,
    solve_deformation,
    two_branch_map,
)
from origami_covers.errors import FirstOrderOnly, InvalidDegree, InvalidGenus
from origami_covers.family import build_family
from origami_covers.linalg import solve_exact
from origami_covers.poly import Poly

z = Poly.variable("z")


class TestNormalizations:
    def test_nodal_cubic(self):
        curve = normalize_nodal_cubic()
        u = Poly.variable("u")
        assert curve.x_of_u == u * u - 1
        assert curve.y_of_u == u**3 - u
        assert curve.satisfies(nodal_cubic_rhs())

    @pytest.mark.parametrize("g", [2, 3, 4, 5])
    def test_degenerate_source(self, g):
        curve = normalize_degenerate_source(g)
        assert curve.satisfies(degenerate_source_rhs(g))

    def test_bad_genus(self):
        with pytest.raises(InvalidGenus):
            normalize_degenerate_source(1)


class TestTwoBranchMap:
    def test_degree_three(self):
        m = two_branch_map(3)
        assert m.num == z**3 + 3 * z
        assert m.den == 3 * z * z + 1

    def test_degree_five(self):
        m = two_branch_map(5)
        assert m.num == z**5 + 10 * z**3 + 5 * z
        assert m.den == 5 * z**4 + 10 * z * z + 1

    def test_degree_one_is_identity(self):
        assert two_branch_map(1) == z

    @pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
    def test_fixes_plus_minus_one(self, n):
        m = two_branch_map(n)
        one = Poly.constant(1, "z")
        assert m.compose(one) == 1
        assert m.compose(-one) == -1

    @pytest.mark.parametrize("n", [1, 3, 5, 7])
    def test_branched_only_at_fixed_points(self, n):
        # The derivative numerator must be a constant times (z^2 - 1)^(n-1).
        dnum = two_branch_map(n).derivative().num
        quotient = dnum.exact_div((z * z - 1) ** (n - 1))
        assert quotient.is_constant()

    @pytest.mark.parametrize("bad", [0, 2, 4, -3])
    def test_rejects_even_or_nonpositive(self, bad):
        with pytest.raises(InvalidDegree):
            two_branch_map(bad)


class TestDegenerateCover:
    def test_genus_two_maps(self):
        x = Poly.variable()
        cover = degenerate_cover(2)
        assert cover.degree == 3
        # Same maps as the smooth family: denominator (3x+4)^2 expanded.
        assert cover.map.f1.num == x**3
        assert cover.map.f1.den == 9 * x * x + 24 * x + 16
        assert cover.source.rhs == x**4 * (x + 1)
        assert cover.target.rhs == x**3 + x * x

    @pytest.mark.parametrize("g", [2, 3, 4])
    def test_identity_holds(self, g):
        assert verify_cover_identity(degenerate_cover(g))

    @pytest.mark.parametrize("g", [2, 3])
    def test_pipeline_closure(self, g):
        assert pipeline_closure(g)

    def test_map_matches_family(self):
        for g in (2, 3):
            assert degenerate_cover(g).map == build_family(g).cover.map


class TestDeformation:
    def test_genus_two_ansatz(self):
        ansatz = deformation_ansatz(2)
        assert ansatz.unknowns == ("a", "b", "c", "d", "e", "f", "g")
        assert ansatz.map_unknowns == ("e", "f", "g")

    def test_genus_three_ansatz(self):
        ansatz = deformation_ansatz(3)
        assert len(ansatz.curve_unknowns) == 6
        assert len(ansatz.map_unknowns) == 5

    def test_genus_two_solution(self):
        ansatz, _, outcome = solve_deformation(2)
        assert outcome.consistent
        solution = dict(zip(ansatz.unknowns, outcome.solution))
        assert solution == {
            "a": 9, "b": 33, "c": 40, "d": 16, "e": 0, "f": 0, "g": 0,
        }
        assert outcome.nullity == 1

    def test_system_solution_satisfies_system(self):
        system = assemble_deformation_system(2)
        _, _, outcome = solve_deformation(2)
        for row, rhs in zip(system.matrix, system.rhs):
            assert sum(c * v for c, v in zip(row, outcome.solution)) == rhs

    def test_unpinned_solution_also_valid(self):
        # The raw solve (free variables zeroed) must still satisfy the system
        # even though it lands on a different representative.
        system = assemble_deformation_system(2)
        outcome = solve_exact(system)
        assert outcome.consistent
        for row, rhs in zip(system.matrix, system.rhs):
            assert sum(c * v for c, v in zip(row, outcome.solution)) == rhs

    @pytest.mark.parametrize("g", [2, 3, 4, 5])
    def test_deform_recovers_family(self, g):
        assert deform(g) == build_family(g)

    def test_report(self):
        report = deformation_report(2)
        assert report.exact
        assert report.nullity == 1
        assert report.cols == 7
        assert report.solution["b"] == Fraction(33)

    def test_wrong_solution_fails_exactness(self):
        ansatz = deformation_ansatz(2)
        bad = {name: Fraction(1) for name in ansatz.unknowns}
        with pytest.raises(FirstOrderOnly):
            deform(2, solution=bad)

    def test_bad_genus(self):
        with pytest.raises(InvalidGenus):
            deform(1)
