"""
Full 2-Torsion Models.

The model E(a,b): y^2 = x(x+a)(x+b), its normalization, the three
isomorphic choices of the 2-torsion point sent to 0, and the factorization
type of the 2-division cubic of an arbitrary curve.
"""

from dataclasses import dataclass
from math import lcm
from typing import List, Tuple

from ..qfield.field import FieldElem
from ..qfield.rings import factor_OK, gcd_OK
from ..utils.errors import InvalidInputError
from .curve import Curve
from .polynomial import KPoly, cubic_roots_in_K


@dataclass(frozen=True)
class TwistForm:
    """
    The model y^2 = x(x+a)(x+b), written E(a,b).

    Attributes:
        a: First parameter
        b: Second parameter
    """

    a: FieldElem
    b: FieldElem

    def __post_init__(self):
        if self.a.is_zero() or self.b.is_zero() or (self.a - self.b).is_zero():
            raise InvalidInputError(f"E({self.a},{self.b}) is singular: a, b and a-b must be nonzero")

    @property
    def field(self):
        return self.a.field

    @classmethod
    def from_roots(cls, e1: FieldElem, e2: FieldElem, e3: FieldElem) -> "TwistForm":
        """
        y^2 = (x-e1)(x-e2)(x-e3) moved to E(a,b) by x -> x + e1.

        Returns:
            The normalized form with a = e1 - e2, b = e1 - e3
        """
        return cls(e1 - e2, e1 - e3).normalized()

    def normalized(self) -> "TwistForm":
        """
        An isomorphic form with O_K coefficients and square-free gcd.

        Scaling (a, b) by a square c^2 is the substitution x -> c^2 x, so the
        curve is unchanged up to K-isomorphism.
        """
        a, b = self.a, self.b
        den = lcm(a.denominator(), b.denominator())
        a, b = a * den * den, b * den * den
        g = gcd_OK(a, b)
        c = self.field.one
        for prime, exponent in factor_OK(g).factors:
            c = c * prime ** (exponent // 2)
        c2 = c * c
        return TwistForm(a / c2, b / c2)

    def isomorphic_forms(self) -> List["TwistForm"]:
        """E(a,b), E(-a,b-a), E(-b,a-b): each 2-torsion point moved to 0."""
        a, b = self.a, self.b
        return [self, TwistForm(-a, b - a), TwistForm(-b, a - b)]

    def twist(self, t: FieldElem) -> "TwistForm":
        """E(ta, tb), the quadratic twist by t, normalized."""
        t = self.field.coerce(t)
        return TwistForm(t * self.a, t * self.b).normalized()

    def to_curve(self) -> Curve:
        """[0, a+b, 0, ab, 0]."""
        return Curve(self.field, [0, self.a + self.b, 0, self.a * self.b, 0])

    def __str__(self) -> str:
        return f"E({self.a},{self.b})"


@dataclass(frozen=True)
class TwoTorsionSplit:
    """
    Factorization type of the 2-division cubic over K.

    Attributes:
        kind: 'irreducible', 'one_root' or 'full'
        roots: The roots in K (none, one, or three sorted roots)
        cubic: The monic 2-division cubic
    """

    kind: str
    roots: Tuple[FieldElem, ...]
    cubic: KPoly

    def quadratic_factor(self) -> KPoly:
        """For one_root: the monic quadratic left after removing the root."""
        if self.kind != "one_root":
            raise InvalidInputError("Only a one_root split has an irreducible quadratic factor")
        q, _ = self.cubic.divmod(KPoly(self.cubic.field, (-self.roots[0], self.cubic.field.one)))
        return q

    def discriminant(self) -> FieldElem:
        """For one_root: the discriminant of the quadratic factor."""
        q = self.quadratic_factor()
        return q.coeffs[1] * q.coeffs[1] - 4 * q.coeffs[0]


def two_torsion_split(E: Curve) -> TwoTorsionSplit:
    """
    Classify the 2-division cubic of E over K.

    Args:
        E: Curve over K (any long model; the cubic is that of the
           isomorphic model y^2 = g(x))

    Returns:
        TwoTorsionSplit with kind and roots
    """
    cubic = E.two_division_cubic()
    roots = tuple(cubic_roots_in_K(cubic))
    if not roots:
        kind = "irreducible"
    elif len(roots) == 1:
        kind = "one_root"
    else:
        kind = "full"
    return TwoTorsionSplit(kind, roots, cubic)


def twist_form_of(E: Curve) -> TwistForm:
    """
    The normalized E(a,b) form of a curve with full 2-torsion over K.

    Raises:
        InvalidInputError: If the 2-torsion is not fully rational
    """
    split = two_torsion_split(E)
    if split.kind != "full":
        raise InvalidInputError(f"{E} does not have full 2-torsion over {E.field!r}")
    return TwistForm.from_roots(*split.roots)
