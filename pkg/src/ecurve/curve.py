"""
Elliptic Curves over K.

Long Weierstrass models y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 with
exact coefficients, points with coordinates in K or in a radical tower, and
the chord-tangent group law. The group law is written once against the
coefficient attributes so the finite-field curves reuse it.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, List, Optional, Sequence

from ..qfield.field import FieldElem, QField, parse_elem_list
from ..qfield.radical import RadicalElem, tower_sqrt
from ..qfield.squares import sqrt_in_K
from ..utils.errors import FieldParseError, InvalidInputError, SingularCurveError, ZeroDivisorError
from .polynomial import KPoly


@dataclass(frozen=True)
class Point:
    """
    A point of an elliptic curve: the point at infinity when x is None.

    Coordinates are FieldElem, RadicalElem or finite-field elements.
    """

    x: Any = None
    y: Any = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = Point()


class GroupLawMixin:
    """
    Chord-tangent addition for long Weierstrass models.

    Subclasses provide attributes a1, a2, a3, a4, a6 supporting exact
    arithmetic with the point coordinates.
    """

    a1: Any
    a2: Any
    a3: Any
    a4: Any
    a6: Any

    def is_on(self, P: Point) -> bool:
        if P.is_infinity:
            return True
        x, y = P.x, P.y
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x * x * x + self.a2 * x * x + self.a4 * x + self.a6
        return (lhs - rhs) == 0

    def neg(self, P: Point) -> Point:
        if P.is_infinity:
            return P
        return Point(P.x, -P.y - self.a1 * P.x - self.a3)

    def add(self, P: Point, Q: Point) -> Point:
        """P + Q; coordinates must share a tower (or one tower must contain the other)."""
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if x1 == x2:
            if (y1 + y2 + self.a1 * x2 + self.a3) == 0:
                return INFINITY
            den = 2 * y1 + self.a1 * x1 + self.a3
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4 - self.a1 * y1) / den
            nu = (-x1 * x1 * x1 + self.a4 * x1 + 2 * self.a6 - self.a3 * y1) / den
        else:
            den = x2 - x1
            lam = (y2 - y1) / den
            nu = (y1 * x2 - y2 * x1) / den
        x3 = lam * lam + self.a1 * lam - self.a2 - x1 - x2
        y3 = -(lam + self.a1) * x3 - nu - self.a3
        return Point(x3, y3)

    def double(self, P: Point) -> Point:
        return self.add(P, P)

    def mul(self, n: int, P: Point) -> Point:
        """[n]P by double-and-add; [-n]P = -[n]P."""
        if n < 0:
            return self.neg(self.mul(-n, P))
        result = INFINITY
        addend = P
        while n:
            if n & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            n >>= 1
        return result

    def order(self, P: Point, bound: int) -> Optional[int]:
        """The order of P if it is at most bound, else None."""
        Q = P
        for k in range(1, bound + 1):
            if Q.is_infinity:
                return k
            Q = self.add(Q, P)
        return None


class Curve(GroupLawMixin):
    """
    An elliptic curve over K in long Weierstrass form.

    Args:
        field: The base field
        coeffs: [a1, a2, a3, a4, a6] as FieldElem, int or Fraction

    Raises:
        SingularCurveError: If the discriminant vanishes
    """

    def __init__(self, field: QField, coeffs: Sequence):
        if len(coeffs) != 5:
            raise InvalidInputError(f"Expected 5 coefficients, got {len(coeffs)}")
        self.field = field
        self.a1, self.a2, self.a3, self.a4, self.a6 = (field.coerce(c) for c in coeffs)
        if self.discriminant.is_zero():
            raise SingularCurveError(f"Singular model {self}")

    @classmethod
    def parse(cls, text: str, field: QField) -> "Curve":
        """
        Parse the `[a1,a2,a3,a4,a6]` text form.

        Raises:
            FieldParseError: On malformed text, with token position
            SingularCurveError: If the model is singular
        """
        coeffs = parse_elem_list(text, field)
        if len(coeffs) != 5:
            raise FieldParseError(f"Expected 5 coefficients, got {len(coeffs)}", text.strip()[-1:], len(text))
        return cls(field, coeffs)

    @classmethod
    def short(cls, field: QField, A, B) -> "Curve":
        """y^2 = x^3 + A*x + B."""
        return cls(field, [0, 0, 0, A, B])

    @property
    def coeffs(self) -> List[FieldElem]:
        return [self.a1, self.a2, self.a3, self.a4, self.a6]

    @cached_property
    def b2(self) -> FieldElem:
        return self.a1 * self.a1 + 4 * self.a2

    @cached_property
    def b4(self) -> FieldElem:
        return 2 * self.a4 + self.a1 * self.a3

    @cached_property
    def b6(self) -> FieldElem:
        return self.a3 * self.a3 + 4 * self.a6

    @cached_property
    def b8(self) -> FieldElem:
        a1, a2, a3, a4, a6 = self.coeffs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @cached_property
    def c4(self) -> FieldElem:
        return self.b2 * self.b2 - 24 * self.b4

    @cached_property
    def c6(self) -> FieldElem:
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @cached_property
    def discriminant(self) -> FieldElem:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @cached_property
    def j_invariant(self) -> FieldElem:
        return self.c4 ** 3 / self.discriminant

    def is_short(self) -> bool:
        return self.a1.is_zero() and self.a2.is_zero() and self.a3.is_zero()

    def has_two_division_form(self) -> bool:
        return self.a1.is_zero() and self.a3.is_zero()

    def two_division_cubic(self) -> KPoly:
        """The monic cubic g with y'^2 = g(x), y' = y + (a1*x + a3)/2."""
        K = self.field
        return KPoly(K, (self.b6 / 4, self.b4 / 2, self.b2 / 4, K.one))

    def two_division_model(self) -> "Curve":
        """The isomorphic model y^2 = x^3 + (b2/4)x^2 + (b4/2)x + b6/4."""
        if self.has_two_division_form():
            return self
        return Curve(self.field, [0, self.b2 / 4, 0, self.b4 / 2, self.b6 / 4])

    def to_two_division_point(self, P: Point) -> Point:
        """Transport P to two_division_model()."""
        if P.is_infinity or self.has_two_division_form():
            return P
        return Point(P.x, P.y + (self.a1 * P.x + self.a3) / 2)

    def from_two_division_point(self, P: Point) -> Point:
        """Transport a point of two_division_model() back to this model."""
        if P.is_infinity or self.has_two_division_form():
            return P
        return Point(P.x, P.y - (self.a1 * P.x + self.a3) / 2)

    def short_model(self) -> "Curve":
        """The isomorphic short model y^2 = x^3 - 27*c4*x - 54*c6."""
        if self.is_short():
            return self
        return Curve.short(self.field, -27 * self.c4, -54 * self.c6)

    def points_with_x(self, x) -> List[Point]:
        """
        The points of this curve with the given x-coordinate.

        x may be a FieldElem (points over K) or a RadicalElem (points over
        that tower); the square root is taken inside the same tower.

        Returns:
            Zero, one or two points
        """
        g = self.two_division_cubic()
        rhs = g(x)
        if isinstance(rhs, RadicalElem):
            root = tower_sqrt(rhs)
        else:
            root = sqrt_in_K(rhs)
        if root is None:
            return []
        shift = (self.a1 * x + self.a3) / 2
        if root == 0:
            return [Point(x, -shift)]
        return [Point(x, root - shift), Point(x, -root - shift)]

    def quadratic_twist(self, d: FieldElem) -> "Curve":
        """
        The quadratic twist E^(d).

        For y^2 = x^3 + a2*x^2 + a4*x + a6 this is
        y^2 = x^3 + d*a2*x^2 + d^2*a4*x + d^3*a6, which for a short model is
        y^2 = x^3 + a*d^2*x + b*d^3. Other models are first moved to the
        isomorphic two-division model.

        Raises:
            ZeroDivisorError: If d is zero
        """
        d = self.field.coerce(d)
        if d.is_zero():
            raise ZeroDivisorError("Cannot twist by 0")
        E = self.two_division_model()
        return Curve(self.field, [0, d * E.a2, 0, d * d * E.a4, d ** 3 * E.a6])

    def __eq__(self, other) -> bool:
        return isinstance(other, Curve) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.D, tuple(self.coeffs)))

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"Curve({self} over {self.field!r})"


def group_add(E: Curve, P: Point, Q: Point) -> Point:
    """P + Q on E."""
    return E.add(P, Q)


def scalar_mul(E: Curve, n: int, P: Point) -> Point:
    """[n]P on E."""
    return E.mul(n, P)


def quadratic_twist(E: Curve, d: FieldElem) -> Curve:
    """The quadratic twist E^(d)."""
    return E.quadratic_twist(d)


def kubert_curve(field: QField, t) -> Curve:
    """
    The order-7 family y^2 + (1-c)xy - by = x^3 - bx^2 with b = t^3 - t^2, c = t^2 - t.

    The point (0, 0) has order 7 whenever the model is nonsingular.
    """
    t = field.coerce(t)
    b = t ** 3 - t ** 2
    c = t ** 2 - t
    return Curve(field, [1 - c, -b, -b, 0, 0])
