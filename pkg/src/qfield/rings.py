"""
Rings of Integers.

Euclidean division, gcd and factorization in O_K = Z[i] or Z[w]. Both rings
are Euclidean for the norm; factorization goes through the rational norm
(factored with sympy) and splits each rational prime by its behavior in O_K.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from sympy import factorint, primerange
from sympy.ntheory import sqrt_mod

from ..utils.config import get_settings
from ..utils.errors import FactorizationBoundError, NotIntegralError, ZeroDivisorError
from ..utils.logger import get_logger
from .field import FieldElem, QField

logger = get_logger(__name__)

# O_K elements are FieldElem values whose coordinates satisfy is_integral.
RingElem = FieldElem


def is_integral(x: FieldElem) -> bool:
    """
    Exact membership test for O_K.

    For D = -1 both coordinates are integers; for D = -3 either both are
    integers or both are halves of odd integers.
    """
    if x.field.D == -1:
        return x.a.denominator == 1 and x.b.denominator == 1
    a2, b2 = 2 * x.a, 2 * x.b
    if a2.denominator != 1 or b2.denominator != 1:
        return False
    return (a2.numerator - b2.numerator) % 2 == 0


def as_ring_elem(x: FieldElem) -> RingElem:
    """
    Validate that x lies in O_K.

    Raises:
        NotIntegralError: If x is not integral
    """
    if not is_integral(x):
        raise NotIntegralError(f"{x} is not in O_K for {x.field!r}")
    return x


def divides(d: FieldElem, x: FieldElem) -> bool:
    """True when d | x in O_K (d nonzero)."""
    if d.is_zero():
        return x.is_zero()
    return is_integral(x / d)


def unit_normalize(x: FieldElem) -> FieldElem:
    """
    Return the associate of x with lexicographically maximal coordinates.

    The maximal associate always has a nonnegative leading coordinate.
    """
    if x.is_zero():
        return x
    return max((u * x for u in x.field.unit_group), key=lambda y: y.key())


def _round_half_up(q: Fraction) -> int:
    return math.floor(q + Fraction(1, 2))


def round_to_ring(x: FieldElem) -> FieldElem:
    """Nearest element of O_K in the Euclidean sense (remainder norm < 1)."""
    K = x.field
    if K.D == -1:
        return K(_round_half_up(x.a), _round_half_up(x.b))
    # x = u + v*w with w = (-1 + s)/2, so v = 2b and u = a + b.
    v = _round_half_up(2 * x.b)
    u = _round_half_up(x.a + x.b)
    return K(Fraction(2 * u - v, 2), Fraction(v, 2))


def divmod_ring(x: FieldElem, y: FieldElem) -> Tuple[FieldElem, FieldElem]:
    """
    Euclidean division x = q*y + r with N(r) < N(y).

    Raises:
        ZeroDivisorError: If y is zero
    """
    if y.is_zero():
        raise ZeroDivisorError("Euclidean division by zero")
    q = round_to_ring(x / y)
    return q, x - q * y


def gcd_OK(x: RingElem, y: RingElem) -> RingElem:
    """
    Greatest common divisor in O_K, unit-normalized.

    Args:
        x: First element of O_K
        y: Second element of O_K

    Returns:
        The normalized gcd

    Raises:
        ZeroDivisorError: If both inputs are zero
        NotIntegralError: If an input is not integral
    """
    as_ring_elem(x)
    as_ring_elem(y)
    if x.is_zero() and y.is_zero():
        raise ZeroDivisorError("gcd(0, 0) is undefined")
    while not y.is_zero():
        _, r = divmod_ring(x, y)
        x, y = y, r
    return unit_normalize(x)


def primes_above(p: int, K: QField) -> List[FieldElem]:
    """
    The primes of O_K lying over the rational prime p, normalized.

    Args:
        p: Rational prime
        K: Active field

    Returns:
        One element for an inert or ramified prime, two for a split prime
    """
    if K.D == -1:
        if p == 2:
            return [unit_normalize(K(1, 1))]
        if p % 4 == 3:
            return [K(p)]
        r = sqrt_mod(-1, p)
        pi = gcd_OK(K(p), K(r, 1))
    else:
        if p == 3:
            return [unit_normalize(K.s)]
        if p % 3 == 2:
            return [K(p)]
        r = sqrt_mod(-3, p)
        pi = gcd_OK(K(p), K(r, 1))
    pair = sorted({unit_normalize(pi), unit_normalize(pi.conj())}, key=lambda e: e.key())
    return pair


def splitting_type(p: int, K: QField) -> str:
    """One of 'split', 'inert', 'ramified'."""
    if (K.D == -1 and p == 2) or (K.D == -3 and p == 3):
        return "ramified"
    if K.D == -1:
        return "split" if p % 4 == 1 else "inert"
    return "split" if p % 3 == 1 else "inert"


def residue_characteristic(pi: FieldElem) -> int:
    """The rational prime below the prime element pi."""
    n = int(pi.norm())
    return min(factorint(n))


@dataclass(frozen=True)
class Factorization:
    """x = unit * prod(prime**exponent)."""

    unit: FieldElem
    factors: Tuple[Tuple[FieldElem, int], ...]

    def expand(self) -> FieldElem:
        result = self.unit
        for prime, exponent in self.factors:
            result = result * prime ** exponent
        return result


def factor_OK(x: RingElem, norm_bound: Optional[int] = None) -> Factorization:
    """
    Factor a nonzero element of O_K into normalized primes.

    The rational norm is factored with sympy; each rational prime is split
    into its primes in O_K and divided out repeatedly.

    Args:
        x: Nonzero integral element
        norm_bound: Largest norm accepted (defaults to the configured bound)

    Returns:
        Factorization with primes sorted by norm, then coordinates

    Raises:
        ZeroDivisorError: If x is zero
        FactorizationBoundError: If N(x) exceeds the bound
    """
    as_ring_elem(x)
    if x.is_zero():
        raise ZeroDivisorError("Cannot factor zero")
    bound = norm_bound if norm_bound is not None else get_settings().factor_norm_bound
    n = int(x.norm())
    if n > bound:
        raise FactorizationBoundError(f"Norm {n} of {x} exceeds the factorization bound {bound}")

    remaining = x
    factors: List[Tuple[FieldElem, int]] = []
    for p in sorted(factorint(n)):
        for pi in primes_above(p, x.field):
            e = 0
            while True:
                quotient = remaining / pi
                if not is_integral(quotient):
                    break
                remaining = quotient
                e += 1
            if e:
                factors.append((pi, e))

    factors.sort(key=lambda pe: (pe[0].norm(), pe[0].key()))
    logger.debug(f"factor_OK({x}) = {remaining} * {[(str(p), e) for p, e in factors]}")
    return Factorization(unit=remaining, factors=tuple(factors))


def valuation(x: FieldElem, pi: FieldElem) -> int:
    """
    The pi-adic valuation of a nonzero element of K.

    Raises:
        ZeroDivisorError: If x is zero
    """
    if x.is_zero():
        raise ZeroDivisorError("Valuation of zero is infinite")
    n = x.denominator()
    y = x * n
    return _ring_valuation(y, pi) - _ring_valuation(x.field(n), pi)


def _ring_valuation(y: FieldElem, pi: FieldElem) -> int:
    e = 0
    while True:
        q = y / pi
        if not is_integral(q):
            return e
        y = q
        e += 1


def primes_by_norm(K: QField, max_norm: int) -> Iterator[FieldElem]:
    """
    Enumerate the primes of O_K with norm at most max_norm, by increasing norm.

    Args:
        K: Active field
        max_norm: Largest norm to include

    Yields:
        Normalized prime elements
    """
    found = []
    for p in primerange(2, max_norm + 1):
        for pi in primes_above(p, K):
            if pi.norm() <= max_norm:
                found.append(pi)
    found.sort(key=lambda e: (e.norm(), e.key()))
    yield from found


def ring_elements_up_to_norm(K: QField, bound: int) -> List[FieldElem]:
    """
    All elements of O_K with norm at most bound, in a fixed order.

    Used to enumerate corpus coefficients.
    """
    elems = []
    r = math.isqrt(4 * bound) + 2
    for u in range(-r, r + 1):
        for v in range(-r, r + 1):
            if K.D == -1:
                x = K(u, v)
            else:
                x = K(Fraction(2 * u - v, 2), Fraction(v, 2))
            if x.norm() <= bound:
                elems.append(x)
    elems.sort(key=lambda e: (e.norm(), e.key()))
    return elems
