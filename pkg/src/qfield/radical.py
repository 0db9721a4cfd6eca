"""
Radical Towers.

Elements of K(sqrt(d_1), ..., sqrt(d_m)) for independent radicands d_j in K
(m <= 3). An element is stored as 2^m coefficients in K indexed by bitmasks:
coords[S] multiplies prod_{j in S} sqrt(d_j).

The tower also carries the exact square-root extraction and the test for
being a square in F, the compositum of all K(sqrt(d)). By Kummer theory an
element z of a tower M is a square in F iff z = d * w^2 with d in K and w in M.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Optional, Tuple, Union

from ..utils.config import get_settings
from ..utils.errors import (
    DependentRadicandError,
    TowerDepthError,
    TowerMismatchError,
    ZeroDivisorError,
)
from .field import FieldElem, QField
from .squares import sqrt_in_K, squarefree_part


@dataclass(frozen=True)
class Tower:
    """
    A tower K(sqrt(d_1), ..., sqrt(d_m)) with multiplicatively independent radicands.

    Attributes:
        field: The base field K
        radicands: The radicands d_1..d_m, in adjunction order
    """

    field: QField
    radicands: Tuple[FieldElem, ...]

    def __post_init__(self):
        object.__setattr__(self, "radicands", tuple(self.radicands))
        max_depth = get_settings().max_tower_depth
        if len(self.radicands) > max_depth:
            raise TowerDepthError(
                f"Tower over {self.field!r} with {len(self.radicands)} radicands exceeds depth {max_depth}"
            )
        for d in self.radicands:
            if d.is_zero():
                raise DependentRadicandError("Radicand 0 is not allowed")
        products = self.mask_products
        for mask in range(1, len(products)):
            if sqrt_in_K(products[mask]) is not None:
                names = [str(self.radicands[j]) for j in range(len(self.radicands)) if mask >> j & 1]
                raise DependentRadicandError(f"Radicands {names} are dependent modulo squares")

    @classmethod
    def build(cls, field: QField, radicands: Iterable[FieldElem]) -> "Tower":
        """Build a validated tower over field."""
        return cls(field, tuple(field.coerce(d) for d in radicands))

    @cached_property
    def mask_products(self) -> Tuple[FieldElem, ...]:
        """prod_{j in S} d_j for every bitmask S."""
        products = [self.field.one]
        for d in self.radicands:
            products = products + [p * d for p in products]
        return tuple(products)

    @cached_property
    def lower(self) -> "Tower":
        """The tower without its last radicand."""
        return Tower(self.field, self.radicands[:-1])

    @property
    def depth(self) -> int:
        return len(self.radicands)

    @property
    def size(self) -> int:
        return 1 << len(self.radicands)

    def extend(self, d: FieldElem) -> "Tower":
        """Adjoin sqrt(d); raises if d is dependent or the depth cap is hit."""
        return Tower(self.field, self.radicands + (self.field.coerce(d),))

    def contains(self, other: "Tower") -> bool:
        return other.field == self.field and all(d in self.radicands for d in other.radicands)

    def zero(self) -> "RadicalElem":
        return RadicalElem(self, (self.field.zero,) * self.size)

    def one(self) -> "RadicalElem":
        return self.lift(self.field.one)

    def lift(self, x: Union[FieldElem, int, Fraction]) -> "RadicalElem":
        """The element x of K viewed in this tower."""
        coords = [self.field.zero] * self.size
        coords[0] = self.field.coerce(x)
        return RadicalElem(self, tuple(coords))

    def radical(self, j: int) -> "RadicalElem":
        """sqrt(d_j)."""
        coords = [self.field.zero] * self.size
        coords[1 << j] = self.field.one
        return RadicalElem(self, tuple(coords))

    def embed(self, x: Union["RadicalElem", FieldElem, int, Fraction]) -> "RadicalElem":
        """
        View an element of a subtower (or of K) in this tower.

        Raises:
            TowerMismatchError: If x lives in a tower not contained in this one
        """
        if not isinstance(x, RadicalElem):
            return self.lift(x)
        if x.tower == self:
            return x
        if not self.contains(x.tower):
            raise TowerMismatchError(
                f"Radicands {[str(d) for d in x.tower.radicands]} are not all in "
                f"{[str(d) for d in self.radicands]}"
            )
        positions = [self.radicands.index(d) for d in x.tower.radicands]
        coords = [self.field.zero] * self.size
        for mask, c in enumerate(x.coords):
            if c.is_zero():
                continue
            target = 0
            for j, pos in enumerate(positions):
                if mask >> j & 1:
                    target |= 1 << pos
            coords[target] = c
        return RadicalElem(self, tuple(coords))

    def join(self, a: "RadicalElem", b: "RadicalElem") -> "RadicalElem":
        """a + b*sqrt(d_m) for a, b in the lower tower."""
        lower = self.lower
        return RadicalElem(self, lower.embed(a).coords + lower.embed(b).coords)

    def __str__(self) -> str:
        if not self.radicands:
            return repr(self.field)
        inner = ", ".join(f"sqrt({d})" for d in self.radicands)
        return f"{self.field!r}({inner})"


@dataclass(frozen=True, eq=False)
class RadicalElem:
    """
    An element of a radical tower.

    Arithmetic with FieldElem, int and Fraction operands lifts them into the
    tower; combining two towers works when one contains the other.
    """

    tower: Tower
    coords: Tuple[FieldElem, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != self.tower.size:
            raise TowerMismatchError(
                f"Expected {self.tower.size} coordinates for {self.tower}, got {len(self.coords)}"
            )

    @property
    def field(self) -> QField:
        return self.tower.field

    def _align(self, other) -> Tuple["RadicalElem", "RadicalElem"]:
        if isinstance(other, RadicalElem):
            if other.tower == self.tower:
                return self, other
            if self.tower.contains(other.tower):
                return self, self.tower.embed(other)
            if other.tower.contains(self.tower):
                return other.tower.embed(self), other
            raise TowerMismatchError(f"Cannot combine elements of {self.tower} and {other.tower}")
        if isinstance(other, (FieldElem, int, Fraction)):
            return self, self.tower.lift(other)
        return NotImplemented

    def __add__(self, other):
        pair = self._align(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        return RadicalElem(x.tower, tuple(p + q for p, q in zip(x.coords, y.coords)))

    __radd__ = __add__

    def __neg__(self) -> "RadicalElem":
        return RadicalElem(self.tower, tuple(-c for c in self.coords))

    def __sub__(self, other):
        pair = self._align(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        return RadicalElem(x.tower, tuple(p - q for p, q in zip(x.coords, y.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._align(other)
        if pair is NotImplemented:
            return NotImplemented
        x, y = pair
        tower = x.tower
        products = tower.mask_products
        out = [tower.field.zero] * tower.size
        for s, cs in enumerate(x.coords):
            if cs.is_zero():
                continue
            for t, ct in enumerate(y.coords):
                if ct.is_zero():
                    continue
                term = cs * ct
                common = s & t
                if common:
                    term = term * products[common]
                out[s ^ t] = out[s ^ t] + term
        return RadicalElem(tower, tuple(out))

    __rmul__ = __mul__

    def split(self) -> Tuple["RadicalElem", "RadicalElem"]:
        """(a, b) in the lower tower with self = a + b*sqrt(d_m)."""
        if not self.tower.radicands:
            raise TowerMismatchError("Cannot split an element of K")
        half = self.tower.size // 2
        lower = self.tower.lower
        return RadicalElem(lower, self.coords[:half]), RadicalElem(lower, self.coords[half:])

    def inverse(self) -> "RadicalElem":
        if self.is_zero():
            raise ZeroDivisorError("Division by zero in a radical tower")
        if not self.tower.radicands:
            return self.tower.lift(self.coords[0].inverse())
        a, b = self.split()
        t = self.tower.radicands[-1]
        inv_den = (a * a - b * b * t).inverse()
        return self.tower.join(a * inv_den, -(b * inv_den))

    def __truediv__(self, other):
        if isinstance(other, RadicalElem):
            x, y = self._align(other)
            return x * y.inverse()
        if isinstance(other, (FieldElem, int, Fraction)):
            o = self.field.coerce(other)
            inv = o.inverse()
            return RadicalElem(self.tower, tuple(c * inv for c in self.coords))
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "RadicalElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def in_base(self) -> bool:
        """True when the element lies in K."""
        return all(c.is_zero() for c in self.coords[1:])

    def base_value(self) -> FieldElem:
        """The element as a FieldElem; only valid when in_base()."""
        if not self.in_base():
            raise TowerMismatchError(f"{self} does not lie in {self.field!r}")
        return self.coords[0]

    def compress(self) -> "RadicalElem":
        """Project onto the tower of radicands actually used."""
        used = 0
        for mask, c in enumerate(self.coords):
            if not c.is_zero():
                used |= mask
        if used == self.tower.size - 1:
            return self
        keep = [j for j in range(self.tower.depth) if used >> j & 1]
        tower = Tower(self.field, tuple(self.tower.radicands[j] for j in keep))
        coords = [self.field.zero] * tower.size
        for mask, c in enumerate(self.coords):
            if c.is_zero():
                continue
            target = 0
            for new_j, j in enumerate(keep):
                if mask >> j & 1:
                    target |= 1 << new_j
            coords[target] = c
        return RadicalElem(tower, tuple(coords))

    def __eq__(self, other) -> bool:
        if isinstance(other, (FieldElem, int, Fraction)):
            return self.in_base() and self.coords[0] == other
        if not isinstance(other, RadicalElem):
            return NotImplemented
        if other.tower == self.tower:
            return self.coords == other.coords
        x, y = self.compress(), other.compress()
        if set(x.tower.radicands) != set(y.tower.radicands):
            return False
        return x.coords == x.tower.embed(y).coords

    def __hash__(self) -> int:
        x = self.compress()
        if not x.tower.radicands:
            return hash(x.coords[0])
        terms = []
        for mask, c in enumerate(x.coords):
            if not c.is_zero():
                rads = frozenset(x.tower.radicands[j] for j in range(x.tower.depth) if mask >> j & 1)
                terms.append((rads, c))
        return hash(frozenset(terms))

    def sqrt(self) -> Optional["RadicalElem"]:
        """A square root inside this tower, or None."""
        return tower_sqrt(self)

    def __str__(self) -> str:
        parts: List[str] = []
        for mask, c in enumerate(self.coords):
            if c.is_zero():
                continue
            rad = "*".join(
                f"sqrt({self.tower.radicands[j]})" for j in range(self.tower.depth) if mask >> j & 1
            )
            coeff = str(c)
            if not c.is_rational() and c.a != 0:
                coeff = f"({coeff})"
            parts.append(coeff if not rad else f"{coeff}*{rad}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"RadicalElem({self} in {self.tower})"


def tower_sqrt(z: RadicalElem) -> Optional[RadicalElem]:
    """
    Exact square root of z inside its own tower, or None.

    Recurses on the last radicand t: for z = a + b*sqrt(t) with b != 0, a
    root p + q*sqrt(t) has p^2 = (a +- n)/2 where n^2 = a^2 - t*b^2, and
    q = b/(2p). For b = 0 the root is either in the lower tower or a lower
    element times sqrt(t).
    """
    tower = z.tower
    if not tower.radicands:
        w = sqrt_in_K(z.coords[0])
        return None if w is None else tower.lift(w)

    t = tower.radicands[-1]
    a, b = z.split()
    if b.is_zero():
        r = tower_sqrt(a)
        if r is not None:
            return tower.embed(r)
        r = tower_sqrt(a / t)
        if r is not None:
            return tower.join(tower.lower.zero(), r)
        return None

    n = tower_sqrt(a * a - b * b * t)
    if n is None:
        return None
    for cand in ((a + n) / 2, (a - n) / 2):
        p = tower_sqrt(cand)
        if p is None or p.is_zero():
            continue
        w = tower.join(p, b / (p * 2))
        if w * w == z:
            return w
    return None


def f_square_decomposition(z: RadicalElem) -> Optional[Tuple[FieldElem, RadicalElem]]:
    """
    Write z = d * w^2 with d in K and w in z's tower, if possible.

    Such a decomposition exists iff z is a square in F.

    Returns:
        (d, w) or None
    """
    tower = z.tower
    K = tower.field
    if z.is_zero():
        return K.one, tower.zero()
    if not tower.radicands:
        return z.coords[0], tower.one()

    t = tower.radicands[-1]
    a, b = z.split()
    if b.is_zero():
        rec = f_square_decomposition(a)
        if rec is None:
            return None
        d, w = rec
        return d, tower.embed(w)

    n = tower_sqrt(a * a - b * b * t)
    if n is None:
        return None
    for cand in ((a + n) / 2, (a - n) / 2):
        if cand.is_zero():
            continue
        rec = f_square_decomposition(cand)
        if rec is None:
            continue
        d, p = rec
        if p.is_zero():
            continue
        w = tower.join(p, b / (p * (2 * d)))
        if w * w * d == z:
            return d, w
    return None


def is_square_in_F(z: Union[RadicalElem, FieldElem]) -> bool:
    """Decide whether a tower element (or an element of K) is a square in F."""
    if isinstance(z, FieldElem):
        return True
    return f_square_decomposition(z) is not None


def sqrt_with_extension(tower: Tower, z: RadicalElem) -> Optional[Tuple[Tower, RadicalElem]]:
    """
    A square root of z in tower or in tower(sqrt(d)) for a single d in K.

    Args:
        tower: Tower containing z
        z: Element to take the root of

    Returns:
        (tower', r) with r^2 = z, or None when z is not a square in F

    Raises:
        TowerDepthError: If the extension would exceed the depth cap
    """
    z = tower.embed(z)
    r = tower_sqrt(z)
    if r is not None:
        return tower, r
    rec = f_square_decomposition(z)
    if rec is None:
        return None
    d, w = rec
    s = squarefree_part(d)
    c = sqrt_in_K(d / s)
    bigger = tower.extend(s)
    root = bigger.embed(w) * bigger.radical(bigger.depth - 1) * c
    return bigger, root
