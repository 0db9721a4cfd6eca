"""
Tests for exact arithmetic in Q(i) and Q(sqrt(-3)).
"""

import random
from fractions import Fraction

import pytest

from src.qfield.field import EISENSTEIN, GAUSS, QField, field_by_name, parse_elem, parse_elem_list
from src.qfield.rings import (
    divmod_ring,
    factor_OK,
    gcd_OK,
    is_integral,
    primes_above,
    ring_elements_up_to_norm,
    splitting_type,
    unit_normalize,
    valuation,
)
from src.qfield.squares import (
    is_square_in_K,
    same_square_class,
    sqrt_in_K,
    sqrt_is_square_in_F,
    squarefree_part,
)
from src.utils.errors import (
    FactorizationBoundError,
    FieldParseError,
    InvalidInputError,
    NotIntegralError,
    ZeroDivisorError,
)


class TestFieldArithmetic:
    """Field operations on a + b*s."""

    def test_multiplication_uses_the_generator_square(self):
        assert GAUSS(1, 2) * GAUSS(3, -1) == GAUSS(5, 5)
        assert EISENSTEIN.s * EISENSTEIN.s == -3
        assert GAUSS.s ** 4 == 1

    def test_norm_is_nonnegative_and_multiplicative(self):
        rng = random.Random(7)
        for K in (GAUSS, EISENSTEIN):
            for _ in range(50):
                x = K(Fraction(rng.randint(-9, 9), rng.randint(1, 4)), rng.randint(-9, 9))
                y = K(rng.randint(-9, 9), Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
                assert x.norm() >= 0
                assert (x * y).norm() == x.norm() * y.norm()

    def test_division_and_inverse(self):
        x = EISENSTEIN(Fraction(1, 2), Fraction(3, 2))
        assert x * x.inverse() == 1
        assert (x / 3) * 3 == x
        with pytest.raises(ZeroDivisorError):
            GAUSS.zero.inverse()

    def test_common_denominator(self):
        assert GAUSS(Fraction(1, 6), Fraction(1, 4)).denominator() == 12
        assert EISENSTEIN(Fraction(3, 2), Fraction(1, 2)).denominator() == 2
        assert GAUSS(5, -3).denominator() == 1

    def test_unit_groups(self):
        assert len(GAUSS.unit_group) == 4
        assert len(EISENSTEIN.unit_group) == 6
        assert all(u.norm() == 1 for u in EISENSTEIN.unit_group)
        assert GAUSS.unit_squares == (GAUSS(1), GAUSS(-1))
        assert len(EISENSTEIN.unit_squares) == 3

    def test_rejects_other_fields(self):
        with pytest.raises(InvalidInputError):
            QField(-2, "other")
        with pytest.raises(InvalidInputError):
            field_by_name("rational")
        with pytest.raises(InvalidInputError):
            GAUSS.one + EISENSTEIN.one

    def test_rational_elements_compare_with_ints(self):
        assert GAUSS(3) == 3
        assert hash(GAUSS(3)) == hash(Fraction(3))
        assert GAUSS(3, 1) != 3


class TestParsing:
    """The R, R+R*s grammar."""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("1/2+3*s", (Fraction(1, 2), Fraction(3))),
            ("s", (Fraction(0), Fraction(1))),
            ("-7", (Fraction(-7), Fraction(0))),
            ("-s+4", (Fraction(4), Fraction(-1))),
            (" 2 - 1/3*s ", (Fraction(2), Fraction(-1, 3))),
        ],
    )
    def test_parse(self, text, expected):
        x = parse_elem(text, GAUSS)
        assert (x.a, x.b) == expected

    def test_format_round_trip(self):
        for x in (GAUSS(0, -1), GAUSS(Fraction(-1, 2), 3), EISENSTEIN(5), EISENSTEIN(0, Fraction(2, 7))):
            assert x.field.parse(x.field.format(x)) == x

    def test_format_text(self):
        assert str(GAUSS(0, -1)) == "-1*s"
        assert str(GAUSS(Fraction(1, 2), 3)) == "1/2+3*s"

    def test_error_names_token_and_position(self):
        with pytest.raises(FieldParseError) as exc:
            parse_elem("1+*s", GAUSS)
        assert exc.value.token == "*"
        assert exc.value.position == 2

    def test_zero_denominator(self):
        with pytest.raises(FieldParseError) as exc:
            parse_elem("1/0", GAUSS)
        assert exc.value.position == 2

    def test_empty_text(self):
        with pytest.raises(FieldParseError):
            parse_elem("", EISENSTEIN)

    def test_list_positions_refer_to_full_text(self):
        assert parse_elem_list("[0,0,0,4,0]", GAUSS)[3] == 4
        with pytest.raises(FieldParseError) as exc:
            parse_elem_list("[0,0,0,x,0]", GAUSS)
        assert exc.value.token == "x"
        assert exc.value.position == 7

    def test_list_needs_brackets(self):
        with pytest.raises(FieldParseError):
            parse_elem_list("0,0,0,4,0", GAUSS)


class TestRings:
    """Euclidean division, gcd and factorization in O_K."""

    def test_integrality(self):
        assert is_integral(GAUSS(2, -3))
        assert not is_integral(GAUSS(Fraction(1, 2), Fraction(1, 2)))
        assert is_integral(EISENSTEIN(Fraction(1, 2), Fraction(1, 2)))
        assert not is_integral(EISENSTEIN(Fraction(1, 2), 1))

    def test_euclidean_remainder_is_smaller(self):
        rng = random.Random(11)
        for K in (GAUSS, EISENSTEIN):
            elems = ring_elements_up_to_norm(K, 400)
            for _ in range(200):
                x, y = rng.choice(elems), rng.choice(elems)
                if y.is_zero():
                    continue
                q, r = divmod_ring(x, y)
                assert x == q * y + r
                assert r.norm() < y.norm()

    def test_gcd(self):
        assert gcd_OK(GAUSS(5), GAUSS(3, 1)) == unit_normalize(GAUSS(2, -1))
        with pytest.raises(ZeroDivisorError):
            gcd_OK(GAUSS.zero, GAUSS.zero)
        with pytest.raises(NotIntegralError):
            gcd_OK(GAUSS(Fraction(1, 2)), GAUSS(1))

    @pytest.mark.parametrize("K", [GAUSS, EISENSTEIN])
    def test_gcd_agrees_with_factorization(self, K):
        rng = random.Random(3)

        def element():
            while True:
                u, v = rng.randint(-1000, 1000), rng.randint(-1000, 1000)
                x = K(u, v) if K.D == -1 else K(Fraction(2 * u - v, 2), Fraction(v, 2))
                if not x.is_zero() and x.norm() <= 10 ** 6:
                    return x

        for _ in range(500):
            x, y = element(), element()
            g = gcd_OK(x, y)
            fx = dict(factor_OK(x).factors)
            fy = dict(factor_OK(y).factors)
            expected = K.one
            for p in set(fx) & set(fy):
                expected = expected * p ** min(fx[p], fy[p])
            assert g == unit_normalize(expected)

    def test_unit_normalize(self):
        assert unit_normalize(GAUSS(-3)) == 3
        x = EISENSTEIN(Fraction(5, 2), Fraction(1, 2))
        assert all(unit_normalize(u * x) == unit_normalize(x) for u in EISENSTEIN.unit_group)

    def test_factorization_reproduces_input(self):
        rng = random.Random(5)
        for K in (GAUSS, EISENSTEIN):
            elems = [x for x in ring_elements_up_to_norm(K, 5000) if not x.is_zero()]
            for x in rng.sample(elems, 60):
                fac = factor_OK(x)
                assert fac.expand() == x
                assert fac.unit.norm() == 1

    def test_factorization_bound(self):
        with pytest.raises(FactorizationBoundError):
            factor_OK(GAUSS(100), norm_bound=10)
        with pytest.raises(ZeroDivisorError):
            factor_OK(GAUSS.zero)

    def test_primes_above(self):
        assert primes_above(3, GAUSS) == [GAUSS(3)]
        split = primes_above(5, GAUSS)
        assert len(split) == 2 and all(p.norm() == 5 for p in split)
        assert all(p.norm() == 7 for p in primes_above(7, EISENSTEIN))
        assert primes_above(3, EISENSTEIN)[0].norm() == 3

    def test_splitting_type(self):
        assert splitting_type(2, GAUSS) == "ramified"
        assert splitting_type(13, GAUSS) == "split"
        assert splitting_type(7, GAUSS) == "inert"
        assert splitting_type(3, EISENSTEIN) == "ramified"
        assert splitting_type(5, EISENSTEIN) == "inert"
        assert splitting_type(13, EISENSTEIN) == "split"

    def test_valuation(self):
        pi = primes_above(5, GAUSS)[0]
        assert valuation(GAUSS(Fraction(1, 5)), pi) == -1
        assert valuation(GAUSS(50), pi) == 2

    def test_enumeration_sizes(self):
        assert len(ring_elements_up_to_norm(GAUSS, 2)) == 9
        assert len(ring_elements_up_to_norm(EISENSTEIN, 1)) == 7


class TestSquareClasses:
    """Square tests and square-free representatives."""

    def test_sqrt_in_K(self):
        assert sqrt_in_K(GAUSS(0, 2)) == GAUSS(1, 1)
        assert sqrt_in_K(EISENSTEIN(-3)) == EISENSTEIN.s
        assert sqrt_in_K(GAUSS(3)) is None
        assert sqrt_in_K(GAUSS(-1)) == GAUSS.s

    def test_is_square_in_K_carries_witness(self):
        verdict = is_square_in_K(GAUSS(-4))
        assert verdict.holds
        assert verdict.witness ** 2 == -4
        assert not is_square_in_K(EISENSTEIN(2))

    def test_squarefree_part(self):
        assert squarefree_part(GAUSS(9)) == 1
        assert squarefree_part(GAUSS(Fraction(4, 9))) == 1
        assert squarefree_part(GAUSS(-1)) == 1
        assert squarefree_part(GAUSS(2)) == GAUSS(0, 1)
        assert squarefree_part(GAUSS(-7)) == 7
        assert squarefree_part(EISENSTEIN(-3)) == 1

    def test_squarefree_part_is_a_class_invariant(self):
        rng = random.Random(13)
        elems = [x for x in ring_elements_up_to_norm(GAUSS, 300) if not x.is_zero()]
        for _ in range(40):
            x, c = rng.choice(elems), rng.choice(elems)
            assert squarefree_part(x * c * c) == squarefree_part(x)
            assert same_square_class(x, squarefree_part(x))

    def test_square_root_square_in_F_over_gauss(self):
        assert sqrt_is_square_in_F(GAUSS(4)).holds
        assert not sqrt_is_square_in_F(GAUSS(2)).holds

    def test_square_root_square_in_F_over_eisenstein(self):
        verdict = sqrt_is_square_in_F(EISENSTEIN(-4))
        assert verdict.holds
        assert verdict.witness ** 4 == -4
        assert len(verdict.radicands) <= 2
        assert not sqrt_is_square_in_F(EISENSTEIN(2)).holds

    def test_zero_is_rejected(self):
        with pytest.raises(ZeroDivisorError):
            squarefree_part(GAUSS.zero)
        with pytest.raises(ZeroDivisorError):
            sqrt_is_square_in_F(EISENSTEIN.zero)
