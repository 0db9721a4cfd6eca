"""
Tests for the growth classifier and the rules it cites.
"""

import random

import pytest

from src.ecurve.curve import Curve, kubert_curve
from src.ecurve.twist_form import TwistForm
from src.growth.burt import verify_burt_compatibility
from src.growth.classifier import classify_growth, replay_certificate
from src.growth.halving import decide_square_in_F, two_power_growth
from src.growth.odd_part import cyclic_subgroup_count, odd_part_F, odd_twist_witnesses
from src.growth.ono import brute_force_twist_order4, exists_twist_order4, ono_order4, ono_order8
from src.growth.rules import RULES, CertificateStep, GrowthCertificate, GrowthResult
from src.qfield.field import EISENSTEIN, GAUSS
from src.qfield.radical import Tower
from src.qfield.squares import sqrt_in_K
from src.suites.growth import PINS
from src.tools.corpus import SPECIAL_J, enumerate_short_curves
from src.torsion.groups import TorsionGroup, forbidden_subgroup, najman_list, theorem_main_list
from src.torsion.torsion_k import torsion_K
from src.utils.errors import ClassificationViolation, InvalidInputError


class TestClassifier:
    """E(F)_tors for curves with known growth."""

    @pytest.mark.parametrize("label,field,text,expected_K,expected_F", PINS)
    def test_pins(self, label, field, text, expected_K, expected_F):
        result = classify_growth(Curve.parse(text, field))
        assert result.torsion_K.format() == expected_K
        assert result.is_exact
        assert result.exact.format() == expected_F

    def test_certificate_cites_the_applied_rule(self):
        result = classify_growth(Curve.short(GAUSS, 4, 0))
        assert result.certificate.rule_ids() == ["R5", "R8", "MAIN"]
        assert replay_certificate(Curve.short(GAUSS, 4, 0), result)

    def test_order_eight_refinement(self):
        result = classify_growth(Curve.parse("[0,337,0,20736,0]", GAUSS))
        step = result.certificate.steps[0]
        assert step.rule_id == "R2"
        assert dict(step.inputs)["excluded"] == "4x32"

    def test_irreducible_cubic_has_no_even_growth(self):
        E = Curve.short(GAUSS, 0, 2)
        result = classify_growth(E)
        assert result.certificate.rule_ids()[0] == "R1"
        assert result.exact.two_part() == TorsionGroup(1, 1)
        assert result.exact in theorem_main_list(GAUSS)

    def test_full_two_torsion_always_gives_full_four_torsion(self):
        E = TwistForm(GAUSS(2), GAUSS(8)).to_curve()
        result = classify_growth(E)
        assert result.exact.contains(TorsionGroup(4, 4))
        assert result.exact.contains(torsion_K(E))
        assert result.exact in theorem_main_list(GAUSS)

    def test_result_serialization(self):
        result = classify_growth(Curve.short(EISENSTEIN, 0, 1))
        payload = result.to_dict()
        assert payload["torsion_K"] == "2x6"
        assert payload["torsion_F"] == {"exact": "4x12"}
        assert payload["certificate"][0]["rule"] == "R3"
        assert payload["certificate"][0]["anchor"] == RULES["R3"].anchor


class TestCertificates:
    """Certificate and result invariants."""

    def test_unregistered_rule(self):
        with pytest.raises(InvalidInputError):
            CertificateStep(rule_id="R99", inputs=(), conclusion="nothing")

    def test_exact_and_candidates_are_exclusive(self):
        G = TorsionGroup(2, 4)
        with pytest.raises(InvalidInputError):
            GrowthResult(torsion_K=G, exact=G, candidates=(G,), certificate=GrowthCertificate())
        with pytest.raises(InvalidInputError):
            GrowthResult(torsion_K=G, exact=None, candidates=(), certificate=GrowthCertificate())

    def test_candidate_result(self):
        G = TorsionGroup(2, 4)
        result = GrowthResult(
            torsion_K=G,
            exact=None,
            candidates=(TorsionGroup(2, 8), TorsionGroup(2, 16)),
            certificate=GrowthCertificate(),
        )
        assert not result.is_exact
        assert result.torsion_F_dict() == {"candidates": ["2x8", "2x16"]}


class TestHalvingEngine:
    """Squares in F and halving heights."""

    def test_elements_of_K_are_squares(self):
        verdict = decide_square_in_F(GAUSS(3))
        assert verdict.holds
        assert verdict.rule == "R7.kummer"

    def test_pure_radicals_use_the_square_root_lemma(self):
        L = Tower.build(GAUSS, [3])
        verdict = decide_square_in_F(L.radical(0))
        assert not verdict.holds
        assert verdict.rule == "R7.square"
        assert decide_square_in_F(L.radical(0) * 2 * GAUSS(0, 1)).rule == "R7.square"

    def test_mixed_elements_use_the_kummer_criterion(self):
        L = Tower.build(GAUSS, [3])
        verdict = decide_square_in_F(L.lift(2) + L.radical(0))
        assert verdict.holds
        assert verdict.rule == "R7.kummer"
        assert not decide_square_in_F(L.lift(1) + L.radical(0)).holds

    def test_two_part_of_full_two_torsion_curve(self):
        growth = two_power_growth(Curve.short(GAUSS, 4, 0))
        assert growth.exact
        assert growth.orders == (4, 8)
        assert growth.group == TorsionGroup(4, 8)
        assert growth.decisions
        assert len(growth.radicands) <= 3

    def test_no_two_torsion(self):
        growth = two_power_growth(Curve.short(GAUSS, 0, 2))
        assert growth.orders == (1, 1)
        assert growth.exact


class TestOddPart:
    """Odd torsion through twists."""

    def test_order_three_from_the_curve_itself(self):
        E = Curve.short(EISENSTEIN, 0, 1)
        assert odd_part_F(E) == TorsionGroup(1, 3)
        witnesses = odd_twist_witnesses(E)
        assert [w.p for w in witnesses] == [3]
        assert witnesses[0].d == 1
        assert witnesses[0].twist.mul(3, witnesses[0].point).is_infinity

    def test_no_odd_part(self):
        assert odd_part_F(Curve.short(GAUSS, 4, 0)) == TorsionGroup(1, 1)

    def test_rational_five_torsion(self):
        E = Curve.parse("[0,-1,1,0,0]", GAUSS)
        assert torsion_K(E) == TorsionGroup(1, 5)
        assert odd_part_F(E) == TorsionGroup(1, 5)
        witnesses = odd_twist_witnesses(E)
        assert [w.p for w in witnesses] == [5, 5]
        assert all(w.twist.mul(5, w.point).is_infinity for w in witnesses)
        result = classify_growth(E)
        assert result.certificate.rule_ids()[0] == "R1"
        assert result.exact == TorsionGroup(1, 5)
        assert result.exact in theorem_main_list(GAUSS)

    def test_seven_torsion_on_kubert_curve(self):
        E = kubert_curve(GAUSS, 2)
        assert odd_part_F(E) == TorsionGroup(1, 7)
        result = classify_growth(E)
        assert result.is_exact
        assert result.exact.contains(TorsionGroup(1, 7))
        assert result.exact in theorem_main_list(GAUSS)

    @pytest.mark.parametrize("a", [(1, 2), (1, -2), (-1, 2), (-1, -2)])
    def test_five_torsion_over_the_compositum(self, a):
        E = Curve.short(GAUSS, GAUSS(*a), 0)
        assert odd_part_F(E) == TorsionGroup(1, 5)
        result = classify_growth(E)
        assert all(G in theorem_main_list(GAUSS) for G in result.groups())
        assert all(G.contains(TorsionGroup(1, 5)) for G in result.groups())

    @pytest.mark.parametrize("p,count,expected", [(3, 2, 2), (5, 2, 1), (5, 4, 2), (7, 3, 1), (7, 0, 0)])
    def test_cyclic_subgroup_count(self, p, count, expected):
        assert cyclic_subgroup_count(p, [GAUSS(k) for k in range(count)]) == expected

    def test_roots_must_fill_whole_subgroups(self):
        with pytest.raises(ClassificationViolation):
            cyclic_subgroup_count(5, [GAUSS(0), GAUSS(1), GAUSS(2)])
        with pytest.raises(ClassificationViolation):
            cyclic_subgroup_count(7, [GAUSS(0), GAUSS(1)])


class TestTwistCriteria:
    """Points of order 4 and 8 on E(a,b) and its twists."""

    def test_order_four(self):
        form = TwistForm(GAUSS(9), GAUSS(16))
        verdict = ono_order4(form)
        assert verdict.holds
        alt, P = verdict.witness
        E = alt.to_curve()
        assert E.is_on(P)
        assert E.order(P, 8) == 4

    def test_order_eight(self):
        assert ono_order8(TwistForm(GAUSS(81), GAUSS(256))).holds
        assert not ono_order8(TwistForm(GAUSS(9), GAUSS(16))).holds

    def test_twist_with_order_four(self):
        form = TwistForm(GAUSS(2), GAUSS(8))
        verdict = exists_twist_order4(form)
        assert verdict.holds
        assert ono_order4(form.twist(verdict.witness)).holds
        assert brute_force_twist_order4(form, 10).holds

    def test_twist_table(self):
        assert verify_burt_compatibility(TorsionGroup(2, 8), TorsionGroup(2, 2), GAUSS, 3).holds
        assert not verify_burt_compatibility(TorsionGroup(2, 8), TorsionGroup(2, 4), GAUSS, 3).holds
        assert verify_burt_compatibility(TorsionGroup(2, 4), TorsionGroup(2, 4), GAUSS, 4).holds
        assert verify_burt_compatibility(TorsionGroup(2, 4), TorsionGroup(2, 4), EISENSTEIN, -1).holds


def _corpus():
    return list(enumerate_short_curves(GAUSS, 1)) + list(enumerate_short_curves(EISENSTEIN, 1))


def _random_non_square(rng, K):
    while True:
        d = K(rng.randint(-7, 7), rng.randint(-7, 7))
        if not d.is_zero() and sqrt_in_K(d) is None:
            return d


class TestCorpusProperties:
    """Invariants of E(K)_tors and E(F)_tors across a seeded corpus of small curves."""

    def test_torsion_over_K_is_in_najman_list(self):
        for E in _corpus():
            assert torsion_K(E) in najman_list(E.field), str(E)

    def test_twist_pairs_are_compatible(self):
        rng = random.Random(31)
        for E in rng.sample(_corpus(), 20):
            d = _random_non_square(rng, E.field)
            T, T_twist = torsion_K(E), torsion_K(E.quadratic_twist(d))
            assert T_twist in najman_list(E.field)
            assert verify_burt_compatibility(T, T_twist, E.field, d).holds, f"{E} twisted by {d}"

    def test_classifier_avoids_forbidden_subgroups(self):
        rng = random.Random(32)
        for E in rng.sample(_corpus(), 24):
            result = classify_growth(E)
            for G in result.groups():
                assert forbidden_subgroup(G) is None, f"{E}: {G}"
                assert G in theorem_main_list(E.field)
                assert G.contains(result.torsion_K)

    def test_growth_is_twist_invariant(self):
        rng = random.Random(33)
        checked = 0
        while checked < 8:
            K = rng.choice([GAUSS, EISENSTEIN])
            a = K(rng.randint(-2, 2), rng.randint(-2, 2))
            b = K(rng.randint(-2, 2), rng.randint(-2, 2))
            if a.is_zero() or b.is_zero() or (4 * a ** 3 + 27 * b ** 2).is_zero():
                continue
            E = Curve.short(K, a, b)
            if any(E.j_invariant == j for j in SPECIAL_J):
                continue
            d = _random_non_square(rng, K)
            result, twisted = classify_growth(E), classify_growth(E.quadratic_twist(d))
            if result.is_exact and twisted.is_exact:
                assert result.exact == twisted.exact, f"{E} twisted by {d}"
            else:
                assert set(result.groups()) & set(twisted.groups()), f"{E} twisted by {d}"
            checked += 1
