"""
Tests for radical towers K(sqrt(d_1), ..., sqrt(d_m)).
"""

from fractions import Fraction

import pytest

from src.qfield.field import EISENSTEIN, GAUSS
from src.qfield.radical import Tower, f_square_decomposition, is_square_in_F, sqrt_with_extension, tower_sqrt
from src.qfield.squares import sqrt_i_multiple_never_square
from src.utils.errors import DependentRadicandError, InvalidInputError, TowerDepthError, TowerMismatchError


class TestTowerConstruction:
    """Validation of radicands."""

    def test_radical_squares_to_radicand(self):
        L = Tower.build(GAUSS, [2, 3])
        assert L.radical(0) * L.radical(0) == 2
        assert L.radical(1) ** 2 == 3
        assert L.size == 4 and L.depth == 2

    def test_dependent_radicands(self):
        with pytest.raises(DependentRadicandError):
            Tower.build(GAUSS, [2, 8])
        with pytest.raises(DependentRadicandError):
            Tower.build(GAUSS, [-1])
        with pytest.raises(DependentRadicandError):
            Tower.build(EISENSTEIN, [0])

    def test_depth_cap(self):
        with pytest.raises(TowerDepthError):
            Tower.build(GAUSS, [2, 3, 5, 7])

    def test_extend_and_embed(self):
        L = Tower.build(EISENSTEIN, [2])
        M = L.extend(5)
        x = L.radical(0) + 1
        assert M.embed(x) == x
        with pytest.raises(TowerMismatchError):
            L.embed(M.radical(1))


class TestRadicalArithmetic:
    """Field operations inside a tower."""

    def test_inverse(self):
        L = Tower.build(GAUSS, [2, 3])
        x = L.radical(0) + L.radical(1) * Fraction(1, 2) + GAUSS(0, 1)
        assert x * x.inverse() == 1
        assert (x / x) == 1

    def test_equality_across_towers(self):
        small = Tower.build(GAUSS, [2])
        big = Tower.build(GAUSS, [2, 3])
        assert small.radical(0) == big.radical(0)
        assert hash(small.radical(0)) == hash(big.radical(0))
        assert small.radical(0) != big.radical(1)

    def test_compress_drops_unused_radicands(self):
        L = Tower.build(GAUSS, [2, 3])
        assert L.radical(1).compress().tower.radicands == (GAUSS(3),)
        assert L.lift(5).compress().in_base()

    def test_split_and_join(self):
        L = Tower.build(EISENSTEIN, [2, 5])
        x = L.radical(0) * 3 + L.radical(1) * L.radical(0) - 1
        a, b = x.split()
        assert L.join(a, b) == x


class TestSquareRoots:
    """Square roots in a tower and squares in F."""

    def test_sqrt_of_radicand(self):
        L = Tower.build(GAUSS, [3])
        assert tower_sqrt(L.lift(3)) == L.radical(0)

    def test_sqrt_of_nested_element(self):
        L = Tower.build(GAUSS, [2, 3])
        z = L.lift(5) + L.radical(0) * L.radical(1) * 2
        r = tower_sqrt(z)
        assert r is not None
        assert r * r == z

    def test_element_square_in_F_but_not_in_tower(self):
        L = Tower.build(GAUSS, [3])
        z = L.lift(2) + L.radical(0)
        assert tower_sqrt(z) is None
        assert is_square_in_F(z)
        d, w = f_square_decomposition(z)
        assert w * w * d == z

    def test_sqrt_with_extension(self):
        L = Tower.build(GAUSS, [3])
        z = L.lift(2) + L.radical(0)
        bigger, r = sqrt_with_extension(L, z)
        assert bigger.depth == 2
        assert r * r == z

    def test_not_square_in_F(self):
        L = Tower.build(GAUSS, [3])
        z = L.lift(1) + L.radical(0)
        assert not is_square_in_F(z)
        assert sqrt_with_extension(L, z) is None

    def test_field_elements_are_squares_in_F(self):
        assert is_square_in_F(GAUSS(3))
        assert is_square_in_F(Tower.build(EISENSTEIN, []).lift(7))

    def test_multiples_of_i_over_eisenstein(self):
        L = Tower.build(EISENSTEIN, [-1])
        verdict = sqrt_i_multiple_never_square(L.radical(0) * 3)
        assert not verdict.holds
        assert verdict.rule == "square i"
        with pytest.raises(InvalidInputError):
            sqrt_i_multiple_never_square(L.lift(3))
        with pytest.raises(InvalidInputError):
            sqrt_i_multiple_never_square(EISENSTEIN(3))
