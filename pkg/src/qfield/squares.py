"""
Square Classes.

Square tests in K, canonical representatives of K*/K*^2, and the two
decision rules about square roots becoming squares in F.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Tuple

from ..utils.errors import InvalidInputError, ZeroDivisorError
from .field import FieldElem
from .rings import factor_OK


@dataclass(frozen=True)
class Decision:
    """
    Outcome of a decision procedure.

    Attributes:
        holds: The yes/no answer
        witness: Optional exact witness for a yes answer
        rule: Name of the rule that decided the question
        radicands: Radicands of a tower witness, when the witness lives in one
    """

    holds: bool
    witness: Any = None
    rule: Optional[str] = None
    radicands: Tuple[FieldElem, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.holds


def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    q = Fraction(q)
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def sqrt_in_K(x: FieldElem) -> Optional[FieldElem]:
    """
    A square root of x in K, or None.

    Solves (p + q*s)^2 = x over Q: with x = a + b*s this is p^2 + D*q^2 = a
    and 2pq = b. The returned root is the lexicographically larger of the
    two roots.
    """
    K = x.field
    if x.is_zero():
        return K.zero
    a, b, D = x.a, x.b, K.D
    roots = []
    if b == 0:
        p = rational_sqrt(a)
        if p is not None:
            roots.append(K(p))
        q = rational_sqrt(a / D)
        if q is not None:
            roots.append(K(0, q))
    else:
        n = rational_sqrt(a * a - D * b * b)
        if n is None:
            return None
        for cand in ((a + n) / 2, (a - n) / 2):
            p = rational_sqrt(cand)
            if p:
                roots.append(K(p, b / (2 * p)))
    for w in roots:
        if w * w == x:
            return max(w, -w, key=lambda e: e.key())
    return None


def is_square_in_K(x: FieldElem) -> Decision:
    """
    Decide whether x is a square in K, with a witness w such that w^2 = x.

    Args:
        x: Element of K

    Returns:
        Decision whose witness is the square root when it exists
    """
    w = sqrt_in_K(x)
    if w is None:
        return Decision(False, rule="square-in-K")
    return Decision(True, witness=w, rule="square-in-K")


def squarefree_part(x: FieldElem) -> FieldElem:
    """
    Canonical integral square-free representative of x in K*/K*^2.

    The denominator is cleared by a square, even prime exponents are
    stripped, and among the representatives v^2 * s (v a unit) the
    lexicographically maximal one is chosen.

    Args:
        x: Nonzero element of K

    Returns:
        s with x = s * c^2 for some c in K; s == 1 iff x is a square in K

    Raises:
        ZeroDivisorError: If x is zero
    """
    if x.is_zero():
        raise ZeroDivisorError("squarefree_part(0) is undefined")
    n = x.denominator()
    fac = factor_OK(x * (n * n))
    s = fac.unit
    for prime, exponent in fac.factors:
        if exponent % 2:
            s = s * prime
    return max((v * s for v in x.field.unit_squares), key=lambda e: e.key())


def same_square_class(x: FieldElem, y: FieldElem) -> bool:
    """True when x/y is a square in K (both nonzero)."""
    return sqrt_in_K(x / y) is not None


def sqrt_is_square_in_F(x: FieldElem) -> Decision:
    """
    Decide whether sqrt(x) is a square in F, i.e. whether x is a fourth power in F.

    Over Q(i) this holds iff x is a square in K; over Q(sqrt(-3)) iff x or
    -x is a square in K. A yes answer carries a tower element r with
    r^4 = x and its radicand list (at most two radicands).

    Args:
        x: Nonzero element of K

    Returns:
        Decision with witness r (a RadicalElem) and its radicands

    Raises:
        ZeroDivisorError: If x is zero
    """
    from .radical import Tower, sqrt_with_extension

    if x.is_zero():
        raise ZeroDivisorError("sqrt_is_square_in_F(0) is undefined")
    K = x.field

    w0 = sqrt_in_K(x)
    if w0 is not None:
        tower, r = sqrt_with_extension(Tower.build(K, ()), Tower.build(K, ()).lift(w0))
        return Decision(True, witness=r, rule="square", radicands=tower.radicands)

    if K.D == -3:
        w0 = sqrt_in_K(-x)
        if w0 is not None:
            # r^2 = i*w0 and i = (1+i)^2/2, so r = (1+i) * sqrt(2*w0) / 2.
            base = Tower.build(K, (K(-1),))
            i = base.radical(0)
            tower, root = sqrt_with_extension(base, base.lift(2 * w0))
            one_plus_i = tower.lift(K.one) + tower.embed(i)
            r = one_plus_i * root / 2
            return Decision(True, witness=r, rule="square", radicands=tower.radicands)

    return Decision(False, rule="square")


def sqrt_i_multiple_never_square(x) -> Decision:
    """
    Over Q(sqrt(-3)), sqrt(a*i) is never a square in F for nonzero a in K.

    The rule is exposed as a decision so that growth certificates can cite it.

    Args:
        x: RadicalElem over the single radicand -1 equal to a*i with a != 0

    Returns:
        Decision(False) tagged with the rule name

    Raises:
        InvalidInputError: If the field is not Q(sqrt(-3)) or x is not of the form a*i
    """
    from .radical import RadicalElem

    if not isinstance(x, RadicalElem):
        raise InvalidInputError("Expected an element a*i of K(i)")
    K = x.tower.field
    if K.D != -3:
        raise InvalidInputError("The rule applies over Q(sqrt(-3)) only")
    if len(x.tower.radicands) != 1 or not same_square_class(x.tower.radicands[0], K(-1)):
        raise InvalidInputError("Expected an element of K(sqrt(-1))")
    if not x.coords[0].is_zero() or x.coords[1].is_zero():
        raise InvalidInputError(f"{x} is not a nonzero multiple of i")
    return Decision(False, rule="square i")
