"""
Tests for finite fields, point counting, reduction and genus-2 Jacobians.
"""

import random
from fractions import Fraction
from math import isqrt

import pytest

from src.ecurve.curve import INFINITY, Curve
from src.ecurve.divpoly import division_polynomial
from src.ecurve.finite_field import (
    FFCurve,
    base_change,
    count_points,
    count_points_extension,
    get_field,
    twist_over_ff,
)
from src.ecurve.genus2 import ORDER7_DESCENT_SEXTIC, genus2_affine_count, genus2_jacobian_order
from src.ecurve.reduction import ADDITIVE, GOOD, MULTIPLICATIVE, ResidueMap, reduce_curve
from src.qfield.field import EISENSTEIN, GAUSS
from src.qfield.rings import primes_above
from src.utils.errors import FieldSizeError, InvalidInputError, ReductionError, SingularCurveError


class TestFiniteField:
    """Table-driven arithmetic in F_q."""

    @pytest.mark.parametrize("p,k", [(7, 1), (3, 2), (5, 3), (13, 2)])
    def test_every_nonzero_element_is_invertible(self, p, k):
        F = get_field(p, k)
        assert F.q == p ** k
        for a in F.elements()[1:]:
            assert a * a.inverse() == F.one
            assert a ** (F.q - 1) == F.one

    def test_half_the_units_are_squares(self):
        F = get_field(3, 2)
        squares = [a for a in F.elements()[1:] if a.is_square()]
        assert len(squares) == 4
        assert all(a.sqrt() * a.sqrt() == a for a in squares)
        assert all(a.sqrt() is None for a in F.elements()[1:] if not a.is_square())

    def test_prime_field_generator(self):
        assert get_field(7).generator == get_field(7)(3)

    def test_unsupported_fields(self):
        with pytest.raises(ReductionError):
            get_field(2)
        with pytest.raises(FieldSizeError):
            get_field(1009, 2)


class TestPointCounting:
    """Counts over F_q and its extensions."""

    def test_count_over_prime_field(self):
        C = FFCurve(get_field(5), [0, 0, 0, 1, 0])
        assert count_points(C) == 4
        assert len(C.points()) == 4
        assert C.points()[0] == INFINITY

    def test_extension_count_matches_base_change(self):
        C = FFCurve(get_field(5), [0, 0, 0, 1, 0])
        assert count_points_extension(C, 2) == 32
        assert count_points(base_change(C, 2)) == 32
        C7 = FFCurve(get_field(7), [0, 1, 0, 3, 5])
        assert count_points_extension(C7, 3) == count_points(base_change(C7, 3))

    def test_hasse_bound(self):
        F = get_field(11)
        for a4 in range(1, 6):
            for a6 in range(1, 6):
                try:
                    C = FFCurve(F, [0, 0, 0, a4, a6])
                except SingularCurveError:
                    continue
                assert abs(count_points(C) - 12) <= 2 * isqrt(11) + 1

    def test_group_order_kills_every_point(self):
        C = FFCurve(get_field(3, 2), [1, 0, 0, 1, 1])
        N = count_points(C)
        assert all(C.mul(N, P) == INFINITY for P in C.points())

    def test_twist_by_non_square(self):
        C = FFCurve(get_field(5), [0, 0, 0, 1, 0])
        assert count_points(C) + count_points(twist_over_ff(C, 2)) == 12
        with pytest.raises(InvalidInputError):
            twist_over_ff(C, 0)

    def test_singular(self):
        with pytest.raises(SingularCurveError):
            FFCurve(get_field(5), [0, 0, 0, 0, 0])


class TestReduction:
    """Residue maps and reduction types."""

    def test_residue_map_of_split_prime(self):
        residue = ResidueMap(GAUSS(2, 1))
        assert residue.field.q == 5
        assert residue.image(GAUSS(0, 1)) ** 2 == residue.field(-1)
        assert residue.image(GAUSS(Fraction(1, 2))) == residue.field(3)
        with pytest.raises(ReductionError):
            residue.image(GAUSS(Fraction(1, 5)))

    def test_prime_above_two_is_rejected(self):
        with pytest.raises(ReductionError):
            ResidueMap(GAUSS(1, 1))
        with pytest.raises(ReductionError):
            ResidueMap(GAUSS(5))

    def test_good_reduction_at_inert_prime(self):
        reduced = reduce_curve(Curve.short(GAUSS, 4, 0), GAUSS(3))
        assert reduced.is_good
        assert reduced.residue.field.q == 9
        assert count_points(reduced.curve) == 16

    def test_good_reduction_at_split_prime(self):
        pi = primes_above(5, GAUSS)[0]
        reduced = reduce_curve(Curve.short(GAUSS, 4, 0), pi)
        assert reduced.reduction_type == GOOD
        assert count_points(reduced.curve) == 8

    def test_bad_reduction_types(self):
        pi = primes_above(5, GAUSS)[0]
        assert reduce_curve(Curve(GAUSS, [0, 3, 0, -4, 0]), pi).reduction_type == MULTIPLICATIVE
        additive = reduce_curve(Curve.short(GAUSS, 5, 0), pi)
        assert additive.reduction_type == ADDITIVE
        assert additive.curve is None

    def test_non_minimal_model_is_scaled(self):
        pi = primes_above(7, EISENSTEIN)[0]
        E = Curve.short(EISENSTEIN, 7 ** 4, 7 ** 6)
        reduced = reduce_curve(E, pi)
        assert reduced.is_good


class TestGenus2:
    """Affine counts and Jacobian orders of z^2 = scale*h(u)."""

    SEXTIC = (-1, 0, 0, 0, 0, 0, 1)

    def test_degenerate_scale(self):
        assert genus2_affine_count(self.SEXTIC, 0, 7) == 7

    def test_jacobian_order_from_zeta(self):
        zeta = genus2_jacobian_order(self.SEXTIC, 1, 7)
        assert zeta.n1 == genus2_affine_count(self.SEXTIC, 1, 7) + 2
        assert zeta.jacobian_order == sum(zeta.l_polynomial)
        assert abs(zeta.c1) <= 4 * isqrt(7) + 4
        assert 7 <= zeta.jacobian_order <= 177

    def test_singular_sextic(self):
        with pytest.raises(SingularCurveError):
            genus2_jacobian_order((0, 0, 0, 0, 0, 0, 1), 1, 7)
        with pytest.raises(InvalidInputError):
            genus2_jacobian_order(self.SEXTIC, 1, 9)

    def test_field_size_cap(self):
        with pytest.raises(FieldSizeError):
            genus2_jacobian_order(self.SEXTIC, 1, 1009)
        with pytest.raises(FieldSizeError):
            genus2_affine_count(self.SEXTIC, 1, 10007)

    def test_descent_curve(self):
        h = ORDER7_DESCENT_SEXTIC
        assert genus2_affine_count(h, 1, 5) == 10
        assert genus2_affine_count(h, 2, 5) == 0
        assert genus2_affine_count(h, 3, 5) == 0
        assert genus2_jacobian_order(h, 1, 5).jacobian_order == 79
        scale = ResidueMap(GAUSS(2, -3)).image(GAUSS(0, 7))
        assert genus2_jacobian_order(h, scale, 13).jacobian_order == 171


def _random_curve(rng, F):
    while True:
        try:
            return FFCurve(F, [0, 0, 0, rng.randrange(F.q), rng.randrange(F.q)])
        except SingularCurveError:
            continue


def _non_square(F):
    return next(a for a in F.elements()[1:] if not a.is_square())


def _division_abscissae(C, n):
    """x(P) for P != O with [n]P = O, leaving out 2-torsion when n is even."""
    xs = set()
    for P in C.points()[1:]:
        if C.mul(n, P) != INFINITY:
            continue
        if n % 2 == 0 and C.mul(2, P) == INFINITY:
            continue
        xs.add(P.x)
    return xs


class TestRandomCurves:
    """Group-law and counting identities on seeded random curves over F_q."""

    PRIMES = (11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

    def test_group_law_is_associative(self):
        rng = random.Random(11)
        for _ in range(20):
            C = _random_curve(rng, get_field(rng.choice(self.PRIMES)))
            points = C.points()
            for _ in range(10):
                P, Q, R = (rng.choice(points) for _ in range(3))
                assert C.add(C.add(P, Q), R) == C.add(P, C.add(Q, R))
                assert C.add(P, Q) == C.add(Q, P)
                assert C.add(P, C.neg(P)) == INFINITY

    def test_twist_counts_sum_to_twice_q_plus_one(self):
        rng = random.Random(12)
        fields = [get_field(p) for p in self.PRIMES] + [get_field(3, 2), get_field(5, 2), get_field(7, 2)]
        for _ in range(100):
            F = rng.choice(fields)
            C = _random_curve(rng, F)
            d = rng.choice([a for a in F.elements()[1:] if not a.is_square()])
            assert count_points(C) + count_points(twist_over_ff(C, d)) == 2 * (F.q + 1)

    def test_division_polynomial_roots_are_torsion_abscissae(self):
        rng = random.Random(13)
        for _ in range(6):
            p = rng.choice(self.PRIMES)
            F = get_field(p)
            while True:
                a, b = rng.randrange(-6, 7), rng.randrange(-6, 7)
                if (4 * a ** 3 + 27 * b ** 2) % p:
                    break
            E = Curve.short(GAUSS, a, b)
            C = FFCurve(F, [0, 0, 0, a, b])
            d = _non_square(F)
            twist = twist_over_ff(C, d)
            for n in range(2, 10):
                coeffs = division_polynomial(E, n).poly.coeffs
                assert all(c.b == 0 and c.a.denominator == 1 for c in coeffs)
                reduced = [F(int(c.a)) for c in coeffs]
                roots = set()
                for x in F.elements():
                    acc = F.zero
                    for c in reversed(reduced):
                        acc = acc * x + c
                    if acc.is_zero():
                        roots.add(x)
                expected = _division_abscissae(C, n) | {X / d for X in _division_abscissae(twist, n)}
                assert roots == expected, f"p={p}, a={a}, b={b}, n={n}"
