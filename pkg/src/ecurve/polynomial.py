"""
Polynomials over K.

Dense univariate polynomials with FieldElem coefficients, with exact
K-root finding. Roots are located through the rational norm polynomial
f * conj(f), factored over Q with sympy; a cheap numpy prefilter modulo
split primes rejects most root-free polynomials before any factoring.
Roots in a radical tower come from a factorization over K instead.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Poly, QQ, Rational, Symbol, expand, im, re, sqrt
from sympy.ntheory import sqrt_mod

from ..qfield.field import FieldElem, QField
from ..qfield.radical import RadicalElem, Tower, tower_sqrt
from ..qfield.rings import factor_OK, is_integral
from ..qfield.squares import sqrt_in_K
from ..utils.errors import FactorizationBoundError, InvalidInputError, TowerDepthError, VerificationMismatch
from ..utils.logger import get_logger

logger = get_logger(__name__)

_X = Symbol("x")

# Completely split primes used by the root prefilter, per field.
_PREFILTER_PRIMES = {
    -1: (13, 17, 29, 37, 41, 53, 61, 73),
    -3: (13, 19, 31, 37, 43, 61, 67, 73),
}


@dataclass(frozen=True)
class KPoly:
    """
    A polynomial sum(coeffs[i] * x^i) over K; trailing zeros are stripped.

    Attributes:
        field: The coefficient field
        coeffs: Coefficients from the constant term upwards
    """

    field: QField
    coeffs: Tuple[FieldElem, ...]

    def __post_init__(self):
        coeffs = [self.field.coerce(c) for c in self.coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_list(cls, field: QField, coeffs: Sequence) -> "KPoly":
        return cls(field, tuple(coeffs))

    @classmethod
    def x(cls, field: QField) -> "KPoly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def const(cls, field: QField, c) -> "KPoly":
        return cls(field, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> FieldElem:
        return self.coeffs[-1]

    def _other(self, other) -> "KPoly":
        if isinstance(other, KPoly):
            return other
        return KPoly(self.field, (other,))

    def __add__(self, other) -> "KPoly":
        o = self._other(other)
        n = max(len(self.coeffs), len(o.coeffs))
        zero = self.field.zero
        return KPoly(self.field, tuple(
            (self.coeffs[i] if i < len(self.coeffs) else zero) + (o.coeffs[i] if i < len(o.coeffs) else zero)
            for i in range(n)
        ))

    __radd__ = __add__

    def __neg__(self) -> "KPoly":
        return KPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "KPoly":
        return self + (-self._other(other))

    def __rsub__(self, other) -> "KPoly":
        return self._other(other) - self

    def __mul__(self, other) -> "KPoly":
        o = self._other(other)
        if self.is_zero() or o.is_zero():
            return KPoly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            for j, d in enumerate(o.coeffs):
                if not d.is_zero():
                    out[i + j] = out[i + j] + c * d
        return KPoly(self.field, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "KPoly":
        result = KPoly(self.field, (self.field.one,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value):
        """Horner evaluation at an element of K, of a tower, or of a finite field."""
        if self.is_zero():
            return value * 0
        acc = self.coeffs[-1] + value * 0
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def divmod(self, divisor: "KPoly") -> Tuple["KPoly", "KPoly"]:
        if divisor.is_zero():
            raise InvalidInputError("Polynomial division by zero")
        rem = list(self.coeffs)
        quot = [self.field.zero] * max(len(rem) - divisor.degree, 1)
        inv_lc = divisor.lc().inverse()
        for shift in range(len(rem) - len(divisor.coeffs), -1, -1):
            coef = rem[shift + divisor.degree] * inv_lc
            quot[shift] = coef
            if coef.is_zero():
                continue
            for i, d in enumerate(divisor.coeffs):
                rem[shift + i] = rem[shift + i] - coef * d
        return KPoly(self.field, tuple(quot)), KPoly(self.field, tuple(rem[:divisor.degree]))

    def monic(self) -> "KPoly":
        inv = self.lc().inverse()
        return KPoly(self.field, tuple(c * inv for c in self.coeffs))

    def derivative(self) -> "KPoly":
        return KPoly(self.field, tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def conj(self) -> "KPoly":
        return KPoly(self.field, tuple(c.conj() for c in self.coeffs))

    def denominator(self) -> int:
        """Least common denominator of all coordinates."""
        return reduce(lcm, (c.denominator() for c in self.coeffs), 1)

    def norm_poly(self) -> Poly:
        """f * conj(f) as a sympy polynomial over Q."""
        g = self * self.conj()
        irrational = [str(c) for c in g.coeffs if not c.is_rational()]
        if irrational:
            raise VerificationMismatch("f * conj(f) has rational coefficients", [], irrational)
        return Poly([Rational(c.a.numerator, c.a.denominator) for c in reversed(g.coeffs)], _X, domain=QQ)

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(terms) or "0"


def _has_root_mod(poly: KPoly, ell: int) -> Optional[bool]:
    """
    Whether the reduction of poly modulo a degree-one prime above ell has a root.

    Returns None when the prime cannot be used (a denominator divisible by
    ell, or a leading coefficient vanishing modulo the prime).
    """
    K = poly.field
    r = sqrt_mod(K.D, ell)
    # The prime gcd(ell, r + s) sends s to -r.
    s_image = (-r) % ell
    den = 2 * poly.denominator()
    if den % ell == 0:
        return None
    coeffs = []
    for c in poly.coeffs:
        a = (c.a * den)
        b = (c.b * den)
        coeffs.append((int(a) + int(b) * s_image) % ell)
    if coeffs[-1] == 0:
        return None
    xs = np.arange(ell, dtype=np.int64)
    acc = np.full(ell, coeffs[-1], dtype=np.int64)
    for c in reversed(coeffs[:-1]):
        acc = (acc * xs + c) % ell
    return bool(np.any(acc == 0))


def roots_in_K(poly: KPoly) -> List[FieldElem]:
    """
    All roots of poly in K, without multiplicity, sorted by coordinates.

    Args:
        poly: Nonzero polynomial over K

    Returns:
        Sorted distinct roots in K
    """
    if poly.is_zero():
        raise InvalidInputError("The zero polynomial has every element as a root")
    if poly.degree <= 0:
        return []
    K = poly.field

    roots = set()
    # Strip x^k so the remaining constant term is nonzero.
    while poly.coeffs[0].is_zero():
        roots.add(K.zero)
        poly = KPoly(K, poly.coeffs[1:])
    if poly.degree == 0:
        return sorted(roots, key=lambda e: e.key())
    if poly.degree == 1:
        roots.add(-poly.coeffs[0] / poly.coeffs[1])
        return sorted(roots, key=lambda e: e.key())

    for ell in _PREFILTER_PRIMES[K.D]:
        verdict = _has_root_mod(poly, ell)
        if verdict is False:
            logger.debug(f"Prefilter: degree {poly.degree} polynomial has no root mod a prime above {ell}")
            return sorted(roots, key=lambda e: e.key())

    _, factors = poly.norm_poly().factor_list()
    for factor, _ in factors:
        deg = factor.degree()
        c = [Fraction(int(q.p), int(q.q)) for q in factor.all_coeffs()]
        if deg == 1:
            cands = [K(-c[1] / c[0])]
        elif deg == 2:
            a, b, cc = c
            disc = sqrt_in_K(K(b * b - 4 * a * cc))
            if disc is None:
                continue
            cands = [(K(-b) + disc) / (2 * a), (K(-b) - disc) / (2 * a)]
        else:
            continue
        for x0 in cands:
            if poly(x0).is_zero():
                roots.add(x0)
    return sorted(roots, key=lambda e: e.key())


def _divisors_OK(x: FieldElem) -> List[FieldElem]:
    """All divisors of a nonzero element of O_K (every unit multiple included)."""
    fac = factor_OK(x)
    base = [x.field.one]
    for prime, exponent in fac.factors:
        base = [d * prime ** e for d in base for e in range(exponent + 1)]
    return [u * d for u in x.field.unit_group for d in base]


def cubic_roots_in_K(cubic: KPoly) -> List[FieldElem]:
    """
    Roots in K of a cubic by divisor enumeration.

    After dividing by the leading coefficient and substituting x = y/N
    with N the common denominator, the cubic is monic with O_K
    coefficients, so every root y in K is a divisor of the constant term.
    One root found this way leaves a quadratic solved by the quadratic
    formula with an exact square test.

    Args:
        cubic: Polynomial of degree 3 over K

    Returns:
        Sorted distinct roots in K
    """
    if cubic.degree != 3:
        raise InvalidInputError(f"Expected a cubic, got degree {cubic.degree}")
    K = cubic.field
    f = cubic.monic()
    N = f.denominator()
    # y^3 + a2*N*y^2 + a1*N^2*y + a0*N^3
    g = KPoly(K, tuple(f.coeffs[i] * N ** (3 - i) for i in range(4)))
    if not all(is_integral(c) for c in g.coeffs):
        raise VerificationMismatch("scaled cubic has O_K coefficients", True, str(g))

    root_y: Optional[FieldElem] = None
    if g.coeffs[0].is_zero():
        root_y = K.zero
    else:
        try:
            for d in _divisors_OK(g.coeffs[0]):
                if g(d).is_zero():
                    root_y = d
                    break
        except FactorizationBoundError:
            logger.debug("Constant term too large to factor; falling back to norm factorization")
            return roots_in_K(cubic)

    if root_y is None:
        return []
    r1 = root_y / N
    quadratic, rem = f.divmod(KPoly(K, (-r1, K.one)))
    if not rem.is_zero():
        raise VerificationMismatch(f"x - ({r1}) divides the cubic", "0", str(rem))
    roots = {r1}
    b, c = quadratic.coeffs[1], quadratic.coeffs[0]
    disc = sqrt_in_K(b * b - 4 * c)
    if disc is not None:
        roots.add((-b + disc) / 2)
        roots.add((-b - disc) / 2)
    return sorted(roots, key=lambda e: e.key())


def poly_from_ints(field: QField, coeffs: Sequence[Union[int, Fraction]]) -> KPoly:
    """Build a KPoly from rational coefficients listed from the constant term."""
    return KPoly(field, tuple(field(c) for c in coeffs))


def _to_sympy(c: FieldElem):
    return Rational(c.a.numerator, c.a.denominator) + Rational(c.b.numerator, c.b.denominator) * sqrt(c.field.D)


def _from_sympy(K: QField, value) -> FieldElem:
    value = expand(value)
    a = Rational(re(value))
    b = Rational(expand(im(value) / sqrt(-K.D)))
    return K(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)))


def factor_over_K(poly: KPoly) -> List[Tuple[KPoly, int]]:
    """
    Monic irreducible factors of poly over K with their multiplicities.

    Uses sympy's factorization over the algebraic field Q(sqrt(D)), which
    is independent of the norm-polynomial route taken by roots_in_K.

    Args:
        poly: Nonzero polynomial over K

    Returns:
        (factor, multiplicity) pairs sorted by degree, then coefficients
    """
    if poly.is_zero():
        raise InvalidInputError("Cannot factor the zero polynomial")
    K = poly.field
    expr = sum(_to_sympy(c) * _X ** i for i, c in enumerate(poly.coeffs))
    _, factors = Poly(expr, _X, extension=sqrt(K.D)).factor_list()
    out = []
    for factor, multiplicity in factors:
        coeffs = tuple(_from_sympy(K, c) for c in reversed(factor.all_coeffs()))
        out.append((KPoly(K, coeffs).monic(), multiplicity))
    return sorted(out, key=lambda fm: (fm[0].degree, [c.key() for c in fm[0].coeffs]))


def _quadratic_roots_in_tower(g: KPoly, L: Tower) -> List[RadicalElem]:
    c0, c1 = g.coeffs[0], g.coeffs[1]
    s = tower_sqrt(L.lift(c1 * c1 - 4 * c0))
    if s is None:
        return []
    return [(s - c1) / 2, (-s - c1) / 2]


def _quartic_roots_in_tower(g: KPoly, L: Tower) -> List[RadicalElem]:
    """
    Roots in L of a monic quartic irreducible over K.

    With x = y - a3/4 the quartic becomes y^4 + p*y^2 + q*y + r, whose
    roots are (+-sqrt(u1) +- sqrt(u2) +- sqrt(u3))/2 for the roots u of
    u^3 + 2p*u^2 + (p^2 - 4r)*u - q^2. When the quartic splits in a
    biquadratic L every u lies in K.
    """
    K = g.field
    a0, a1, a2, a3 = g.coeffs[:4]
    s = a3 / 4
    p = a2 - 6 * s * s
    q = a1 - 2 * a2 * s + 8 * s ** 3
    r = a0 - a1 * s + a2 * s * s - 3 * s ** 4
    resolvent = KPoly(K, (-q * q, p * p - 4 * r, 2 * p, K.one))
    us: List[FieldElem] = []
    for factor, multiplicity in factor_over_K(resolvent):
        if factor.degree == 1:
            us.extend([-factor.coeffs[0]] * multiplicity)
    if len(us) != 3:
        return []
    halves = [tower_sqrt(L.lift(u)) for u in us]
    if any(h is None for h in halves):
        return []
    roots = set()
    for signs in product((1, -1), repeat=3):
        y = sum((h * e for h, e in zip(halves, signs)), L.zero()) / 2
        x = y - s
        if g(x).is_zero():
            roots.add(x)
    return list(roots)


def roots_in_tower(poly: KPoly, L: Tower) -> List[RadicalElem]:
    """
    All roots of a polynomial over K that lie in a tower of depth at most 2.

    L is Galois over K with group (Z/2)^depth, so an irreducible factor
    over K with a root in L has degree 1, 2 or 4 and splits there.

    Args:
        poly: Nonzero polynomial over K
        L: The tower

    Returns:
        Distinct roots in L, sorted by coordinates

    Raises:
        TowerDepthError: If L has more than two radicands
    """
    if L.depth > 2:
        raise TowerDepthError(f"Root finding supports towers of depth 2, got {L}")
    if poly.degree <= 0:
        return []
    roots = set()
    for g, _ in factor_over_K(poly):
        if g.degree > L.size:
            continue
        if g.degree == 1:
            roots.add(L.lift(-g.coeffs[0]))
        elif g.degree == 2:
            roots.update(_quadratic_roots_in_tower(g, L))
        elif g.degree == 4:
            roots.update(_quartic_roots_in_tower(g, L))
    return sorted(roots, key=lambda x: tuple(c.key() for c in x.coords))
