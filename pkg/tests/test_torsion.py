"""
Tests for torsion groups, reduction bounds and E(K)_tors.
"""

import random
from fractions import Fraction

import pytest

from src.ecurve.curve import INFINITY, Curve, Point, kubert_curve
from src.ecurve.divpoly import multiplication_x_map
from src.growth.classifier import classify_growth
from src.growth.halving import two_power_growth
from src.qfield.field import EISENSTEIN, GAUSS
from src.qfield.radical import Tower
from src.tools.corpus import enumerate_short_curves
from src.torsion.bound import torsion_bound, torsion_bound_report
from src.torsion.groups import (
    FORBIDDEN_SUBGROUPS,
    TorsionGroup,
    forbidden_subgroup,
    is_subgroup,
    najman_list,
    theorem_main_list,
)
from src.torsion.torsion_k import point_order, torsion_K, torsion_points
from src.torsion.tower import galois_conjugate, halving_polynomial, tower_torsion
from src.utils.errors import ClassificationViolation, InvalidInputError, TowerDepthError


class TestTorsionGroup:
    """Invariant-factor groups."""

    @pytest.mark.parametrize("text", ["2x8", "(2,8)", "2+8", " 2 x 8 "])
    def test_parse_forms(self, text):
        assert TorsionGroup.parse(text) == TorsionGroup(2, 8)

    def test_cyclic(self):
        G = TorsionGroup.parse("12")
        assert G.is_cyclic
        assert G.format() == "12"
        assert G.order == 12

    def test_invalid(self):
        with pytest.raises(InvalidInputError):
            TorsionGroup.parse("2x3")
        with pytest.raises(InvalidInputError):
            TorsionGroup.parse("two")

    def test_of_and_parts(self):
        G = TorsionGroup.of(4, 6)
        assert G == TorsionGroup(2, 12)
        assert G.two_part() == TorsionGroup(2, 4)
        assert G.odd_part() == TorsionGroup(1, 3)

    def test_direct_sum(self):
        assert TorsionGroup(2, 4).direct_sum(TorsionGroup(1, 3)) == TorsionGroup(2, 12)
        assert TorsionGroup(1, 4).direct_sum(TorsionGroup(1, 8)) == TorsionGroup(4, 8)
        with pytest.raises(InvalidInputError):
            TorsionGroup(2, 2).direct_sum(TorsionGroup(1, 2))

    def test_subgroups(self):
        assert is_subgroup(TorsionGroup(2, 4), TorsionGroup(4, 8))
        assert not is_subgroup(TorsionGroup(1, 16), TorsionGroup(4, 8))

    def test_generators_do_not_affect_equality(self):
        assert TorsionGroup(1, 2, generators=(INFINITY,)) == TorsionGroup(1, 2)


class TestClassificationLists:
    """Najman's lists and the possible groups over F."""

    def test_najman(self):
        assert TorsionGroup(4, 4) in najman_list(GAUSS)
        assert TorsionGroup(4, 4) not in najman_list(EISENSTEIN)
        assert TorsionGroup(3, 6) in najman_list(EISENSTEIN)
        assert len(najman_list(GAUSS)) == 16

    def test_main_list(self):
        assert len(theorem_main_list(GAUSS)) == 20
        assert TorsionGroup(2, 32) in theorem_main_list(EISENSTEIN)
        assert TorsionGroup(2, 32) not in theorem_main_list(GAUSS)

    def test_no_listed_group_holds_a_forbidden_subgroup(self):
        for field in (GAUSS, EISENSTEIN):
            assert all(forbidden_subgroup(G) is None for G in theorem_main_list(field))

    def test_forbidden_subgroup(self):
        assert forbidden_subgroup(TorsionGroup(4, 40)) == TorsionGroup(4, 20)
        assert forbidden_subgroup(TorsionGroup(24, 24)) in FORBIDDEN_SUBGROUPS


class TestTorsionOverK:
    """E(K)_tors from reduction bounds and division polynomials."""

    @pytest.mark.parametrize(
        "field,text,expected",
        [
            (GAUSS, "[0,0,0,4,0]", "2x4"),
            (EISENSTEIN, "[0,0,0,0,1]", "2x6"),
            (GAUSS, "[0,337,0,20736,0]", "2x8"),
            (GAUSS, "[0,34,0,225,0]", "4x4"),
            (EISENSTEIN, "[0,25,0,144,0]", "2x8"),
        ],
    )
    def test_known_groups(self, field, text, expected):
        assert torsion_K(Curve.parse(text, field)).format() == expected

    def test_generators_have_the_right_orders(self):
        E = Curve.short(GAUSS, 4, 0)
        G = torsion_K(E)
        g1, g2 = G.generators
        assert point_order(E, g1, 16) == 4
        assert point_order(E, g2, 16) == 2
        assert E.is_on(g1) and E.is_on(g2)

    def test_torsion_points(self):
        E = Curve.short(GAUSS, 4, 0)
        points = torsion_points(E)
        assert len(points) == 8
        assert points[0] == INFINITY
        assert Point(GAUSS(2), GAUSS(4)) in points

    def test_bound_is_a_multiple_of_the_order(self):
        E = Curve.short(GAUSS, 4, 0)
        assert torsion_bound(E) % 8 == 0
        report = torsion_bound_report(E)
        assert len(report.counts) >= 3
        assert all(n % 8 == 0 for _, _, n in report.counts)

    def test_order_seven(self):
        assert torsion_K(kubert_curve(GAUSS, 2)) == TorsionGroup(1, 7)

    def test_non_torsion_point(self):
        E = Curve.short(GAUSS, 0, 2)
        P = Point(GAUSS(-1), GAUSS(1))
        with pytest.raises(ClassificationViolation):
            point_order(E, P, 12)


class TestTowerTorsion:
    """E(L)_tors over a multiquadratic extension."""

    def test_empty_tower_is_K(self):
        E = Curve.short(GAUSS, 4, 0)
        assert tower_torsion(E, []) == TorsionGroup(2, 4)

    def test_adjoining_sqrt_two_gives_full_four_torsion(self):
        E = Curve.short(GAUSS, 4, 0)
        assert tower_torsion(E, [2]) == TorsionGroup(4, 4)

    def test_second_radicand_gives_a_point_of_order_eight(self):
        E = Curve.short(GAUSS, 4, 0)
        assert tower_torsion(E, [2, GAUSS(1, -1)]) == TorsionGroup(4, 8)
        assert tower_torsion(E, [2, GAUSS(1, -1)], order_cap=4) == TorsionGroup(4, 4)

    def test_odd_part_survives_in_the_tower(self):
        E = Curve.short(EISENSTEIN, 0, 1)
        lam = EISENSTEIN(Fraction(3, 2), Fraction(-1, 2))
        assert tower_torsion(E, [], order_cap=8) == TorsionGroup(2, 6)
        assert tower_torsion(E, [lam, 3], order_cap=8) == TorsionGroup(4, 12)

    def test_halving_polynomial_over_K_is_the_duplication_numerator(self):
        E = Curve.short(GAUSS, 4, 0)
        L = Tower.build(GAUSS, [])
        phi, den = multiplication_x_map(E, 2)
        h = halving_polynomial(E, L.lift(2))
        assert h == phi - den * GAUSS(2)

    def test_galois_conjugate(self):
        L = Tower.build(GAUSS, [2, 3])
        z = L.lift(1) + L.radical(0) + L.radical(1)
        assert galois_conjugate(z, 0) == z
        assert galois_conjugate(z, 1) == L.lift(1) - L.radical(0) + L.radical(1)
        assert galois_conjugate(galois_conjugate(z, 3), 3) == z

    def test_agrees_with_the_halving_engine(self):
        rng = random.Random(41)
        corpus = list(enumerate_short_curves(GAUSS, 1)) + list(enumerate_short_curves(EISENSTEIN, 1))
        compared = 0
        for E in rng.sample(corpus, 16):
            growth = two_power_growth(E)
            if not growth.exact or growth.group.order > 16 or len(growth.radicands) > 2:
                continue
            assert tower_torsion(E, growth.radicands).two_part() == growth.group, str(E)
            result = classify_growth(E)
            if result.is_exact:
                assert result.exact.two_part() == growth.group, str(E)
            compared += 1
        assert compared > 0

    def test_limits(self):
        E = Curve.short(GAUSS, 4, 0)
        with pytest.raises(TowerDepthError):
            tower_torsion(E, [2, 3, 5])
        with pytest.raises(InvalidInputError):
            tower_torsion(E, [2], order_cap=0)
