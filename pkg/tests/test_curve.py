"""
Tests for curves over K: the group law, twists, polynomials and halving.
"""

import random
from fractions import Fraction
from unittest.mock import patch

import pytest

from src.ecurve.curve import INFINITY, Curve, Point, kubert_curve
from src.ecurve.divpoly import division_points_poly, division_polynomial, multiplication_x_map
from src.ecurve.halving import knapp_halving, two_torsion_frame
from src.ecurve.polynomial import (
    KPoly,
    cubic_roots_in_K,
    factor_over_K,
    poly_from_ints,
    roots_in_K,
    roots_in_tower,
)
from src.ecurve.twist_form import TwistForm, two_torsion_split, twist_form_of
from src.qfield.field import EISENSTEIN, GAUSS
from src.qfield.radical import Tower
from src.qfield.rings import factor_OK, gcd_OK, is_integral
from src.utils.errors import (
    FieldParseError,
    InvalidInputError,
    SingularCurveError,
    TowerDepthError,
    VerificationMismatch,
)


@pytest.fixture
def x32():
    """y^2 = x^3 + 4x over Q(i)."""
    return Curve.short(GAUSS, 4, 0)


class TestCurve:
    """Invariants, parsing and the group law."""

    def test_invariants(self, x32):
        assert x32.discriminant == -4096
        assert x32.j_invariant == 1728
        assert Curve.short(EISENSTEIN, 0, 1).j_invariant == 0

    def test_singular_model(self):
        with pytest.raises(SingularCurveError):
            Curve.short(GAUSS, 0, 0)
        with pytest.raises(SingularCurveError):
            Curve.parse("[0,0,0,-3,2]", GAUSS)

    def test_parse(self, x32):
        assert Curve.parse("[0,0,0,4,0]", GAUSS) == x32
        assert str(x32) == "[0,0,0,4,0]"
        with pytest.raises(FieldParseError):
            Curve.parse("[0,0,0,4]", GAUSS)
        with pytest.raises(InvalidInputError):
            Curve(GAUSS, [1, 2, 3])

    def test_point_of_order_four(self, x32):
        P = Point(GAUSS(2), GAUSS(4))
        assert x32.is_on(P)
        assert x32.double(P) == Point(GAUSS(0), GAUSS(0))
        assert x32.order(P, 12) == 4
        assert x32.mul(4, P) == INFINITY
        assert x32.mul(-1, P) == x32.neg(P)

    def test_group_law_is_commutative_and_associative(self, x32):
        P = Point(GAUSS(2), GAUSS(4))
        T = Point(GAUSS(0, 2), GAUSS(0))
        R = Point(GAUSS(-2), GAUSS(0, 4))
        assert all(x32.is_on(Q) for Q in (P, T, R))
        assert x32.add(P, T) == x32.add(T, P)
        assert x32.add(x32.add(P, T), R) == x32.add(P, x32.add(T, R))

    def test_kubert_point_has_order_seven(self):
        E = kubert_curve(GAUSS, 2)
        P = Point(GAUSS(0), GAUSS(0))
        assert E.is_on(P)
        assert E.order(P, 10) == 7

    def test_points_with_x(self, x32):
        ys = {P.y for P in x32.points_with_x(GAUSS(2))}
        assert ys == {GAUSS(4), GAUSS(-4)}
        assert x32.points_with_x(GAUSS(1)) == []
        assert len(Curve.short(GAUSS, 0, 1).points_with_x(GAUSS(-1))) == 1

    def test_points_over_a_tower(self, x32):
        L = Tower.build(GAUSS, [5])
        points = x32.points_with_x(L.lift(1))
        assert len(points) == 2
        S = x32.add(points[0], Point(L.lift(0), L.lift(0)))
        assert x32.is_on(S)

    def test_twist_keeps_j(self, x32):
        twisted = x32.quadratic_twist(GAUSS(3))
        assert twisted.coeffs == [0, 0, 0, 36, 0]
        assert twisted.j_invariant == x32.j_invariant

    def test_random_twists_keep_j(self):
        rng = random.Random(21)
        checked = 0
        while checked < 50:
            K = rng.choice([GAUSS, EISENSTEIN])
            a = K(rng.randrange(-5, 6), rng.randrange(-5, 6))
            b = K(rng.randrange(-5, 6), rng.randrange(-5, 6))
            d = K(rng.randrange(-9, 10), rng.randrange(-9, 10))
            if d.is_zero() or (4 * a ** 3 + 27 * b ** 2).is_zero():
                continue
            E = Curve.short(K, a, b)
            twisted = E.quadratic_twist(d)
            assert twisted.j_invariant == E.j_invariant
            assert twisted.quadratic_twist(d).j_invariant == E.j_invariant
            checked += 1

    def test_models_are_isomorphic(self):
        E = kubert_curve(EISENSTEIN, 3)
        assert E.short_model().j_invariant == E.j_invariant
        model = E.two_division_model()
        P = Point(EISENSTEIN(0), EISENSTEIN(0))
        Q = E.to_two_division_point(P)
        assert model.is_on(Q)
        assert E.from_two_division_point(Q) == P


class TestPolynomials:
    """Roots in K."""

    def test_roots_of_quartic(self):
        roots = roots_in_K(poly_from_ints(GAUSS, [4, 0, 0, 0, 1]))
        assert len(roots) == 4
        assert GAUSS(1, 1) in roots

    def test_roots_with_zero(self):
        roots = roots_in_K(poly_from_ints(EISENSTEIN, [0, 3, 0, 1]))
        assert roots == sorted([EISENSTEIN.zero, EISENSTEIN.s, -EISENSTEIN.s], key=lambda e: e.key())

    def test_no_roots(self):
        assert roots_in_K(poly_from_ints(GAUSS, [-2, 0, 1])) == []
        with pytest.raises(InvalidInputError):
            roots_in_K(KPoly(GAUSS, ()))

    def test_cubic_roots(self, x32):
        assert set(cubic_roots_in_K(x32.two_division_cubic())) == {GAUSS(0), GAUSS(0, 2), GAUSS(0, -2)}
        cubic = poly_from_ints(GAUSS, [Fraction(-1, 8), 0, 0, 1])
        assert cubic_roots_in_K(cubic) == [GAUSS(Fraction(1, 2))]

    def test_division_with_remainder(self):
        f = poly_from_ints(GAUSS, [1, 0, 0, 1])
        q, r = f.divmod(poly_from_ints(GAUSS, [1, 1]))
        assert r.is_zero()
        assert q * poly_from_ints(GAUSS, [1, 1]) == f

    def test_factor_over_K(self):
        factors = factor_over_K(poly_from_ints(GAUSS, [1, 0, 1]))
        assert {f.coeffs[0] for f, _ in factors} == {GAUSS(0, 1), GAUSS(0, -1)}
        assert all(m == 1 for _, m in factors)
        assert [f.degree for f, _ in factors] == [1, 1]
        assert [f.degree for f, _ in factor_over_K(poly_from_ints(EISENSTEIN, [1, 0, 1]))] == [2]
        assert factor_over_K(poly_from_ints(GAUSS, [1, 2, 1])) == [(KPoly(GAUSS, (GAUSS.one, GAUSS.one)), 2)]
        with pytest.raises(InvalidInputError):
            factor_over_K(KPoly(GAUSS, ()))

    def test_roots_in_K_need_no_tower(self):
        L = Tower.build(GAUSS, [])
        roots = roots_in_tower(poly_from_ints(GAUSS, [1, 0, 1]), L)
        assert set(roots) == {L.lift(GAUSS(0, 1)), L.lift(GAUSS(0, -1))}

    def test_quadratic_roots_in_tower(self):
        L = Tower.build(GAUSS, [2])
        roots = roots_in_tower(poly_from_ints(GAUSS, [-2, 0, 1]), L)
        assert len(roots) == 2
        assert all(r * r == L.lift(2) for r in roots)
        assert roots_in_tower(poly_from_ints(GAUSS, [-3, 0, 1]), L) == []

    def test_biquadratic_quartic_splits(self):
        f = poly_from_ints(GAUSS, [1, 0, -10, 0, 1])
        L = Tower.build(GAUSS, [2, 3])
        roots = roots_in_tower(f, L)
        assert len(roots) == 4
        assert all(f(r).is_zero() for r in roots)
        assert roots_in_tower(f, Tower.build(GAUSS, [2])) == []

    def test_roots_in_deep_tower(self):
        with pytest.raises(TowerDepthError):
            roots_in_tower(poly_from_ints(GAUSS, [-2, 0, 1]), Tower.build(GAUSS, [2, 3, 5]))

    def test_non_integral_scaled_cubic(self, x32):
        cubic = x32.two_division_cubic()
        with patch("src.ecurve.polynomial.is_integral", return_value=False):
            with pytest.raises(VerificationMismatch):
                cubic_roots_in_K(cubic)

    def test_cubic_root_that_does_not_divide(self, x32):
        cubic = x32.two_division_cubic()
        one = KPoly(GAUSS, (GAUSS.one,))
        with patch.object(KPoly, "divmod", return_value=(one, one)):
            with pytest.raises(VerificationMismatch):
                cubic_roots_in_K(cubic)

    def test_norm_polynomial_must_be_rational(self):
        f = KPoly(GAUSS, (GAUSS(0, 1), GAUSS.one))
        assert f.norm_poly().all_coeffs() == [1, 0, 1]
        with patch.object(KPoly, "conj", lambda self: self):
            with pytest.raises(VerificationMismatch):
                f.norm_poly()


class TestTwoTorsion:
    """Factorization of the 2-division cubic and the E(a,b) forms."""

    def test_split_kinds(self, x32):
        assert two_torsion_split(x32).kind == "full"
        assert two_torsion_split(Curve.short(GAUSS, 0, 1)).kind == "one_root"
        assert two_torsion_split(Curve.short(EISENSTEIN, 0, 1)).kind == "full"
        assert two_torsion_split(Curve.short(GAUSS, 0, 2)).kind == "irreducible"

    def test_twist_form_of(self, x32):
        form = twist_form_of(x32)
        assert form.to_curve().j_invariant == 1728
        with pytest.raises(InvalidInputError):
            twist_form_of(Curve.short(GAUSS, 0, 2))

    def test_normalized_form(self):
        form = TwistForm(GAUSS(Fraction(1, 2)), GAUSS(1)).normalized()
        assert is_integral(form.a) and is_integral(form.b)
        g = gcd_OK(form.a, form.b)
        assert all(e < 2 for _, e in factor_OK(g).factors)
        assert form.to_curve().j_invariant == TwistForm(GAUSS(Fraction(1, 2)), GAUSS(1)).to_curve().j_invariant

    def test_isomorphic_forms(self):
        form = TwistForm(GAUSS(9), GAUSS(25))
        js = {f.to_curve().j_invariant for f in form.isomorphic_forms()}
        assert len(js) == 1

    def test_degenerate_form(self):
        with pytest.raises(InvalidInputError):
            TwistForm(GAUSS(1), GAUSS(1))


class TestHalving:
    """Halves of points on full 2-torsion models."""

    def test_halves_of_two_torsion_point(self, x32):
        frame = two_torsion_frame(x32)
        L = frame.tower
        T = Point(L.lift(0), L.lift(0))
        halving = knapp_halving(frame, T)
        assert len(halving.halves) == 4
        assert all(x32.double(Q) == T for Q in halving.halves)

    def test_halving_needs_an_extension(self, x32):
        frame = two_torsion_frame(x32)
        L = frame.tower
        P = Point(L.lift(2), L.lift(4))
        assert knapp_halving(frame, P).halves == ()
        extended = knapp_halving(frame, P, extend=True)
        assert extended.tower.depth >= 1
        assert extended.halves
        assert all(x32.double(Q) == P for Q in extended.halves)

    def test_halves_of_infinity_are_two_torsion(self, x32):
        frame = two_torsion_frame(x32)
        assert len(knapp_halving(frame, INFINITY).halves) == 4

    def test_irreducible_cubic_has_no_frame(self):
        assert two_torsion_frame(Curve.short(GAUSS, 0, 2)) is None


class TestDivisionPolynomials:
    """Division polynomials and multiplication maps."""

    def test_third_division_polynomial(self, x32):
        assert division_polynomial(x32, 3).poly == poly_from_ints(GAUSS, [-16, 0, 24, 0, 3])

    def test_degrees(self, x32):
        assert [division_polynomial(x32, n).degree for n in (4, 5, 6, 7)] == [6, 12, 16, 24]

    def test_roots_are_torsion_abscissae(self, x32):
        assert division_polynomial(x32, 4).poly(GAUSS(2)).is_zero()
        E = kubert_curve(GAUSS, 2)
        assert division_polynomial(E, 7).poly(GAUSS.zero).is_zero()

    def test_multiplication_map_matches_group_law(self):
        E = kubert_curve(GAUSS, 2)
        P = Point(GAUSS(0), GAUSS(0))
        for n in (2, 3):
            phi, den = multiplication_x_map(E, n)
            assert phi(P.x) / den(P.x) == E.mul(n, P).x

    def test_division_points(self, x32):
        poly = division_points_poly(x32, 2, GAUSS(0))
        assert poly(GAUSS(2)).is_zero()
        assert poly(GAUSS(-2)).is_zero()

    def test_index_range(self, x32):
        with pytest.raises(InvalidInputError):
            division_polynomial(x32, 0)
        with pytest.raises(InvalidInputError):
            division_polynomial(x32, 33)
