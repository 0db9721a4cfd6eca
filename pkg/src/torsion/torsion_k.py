"""
Torsion over K.

E(K)_tors computed exactly: a reduction bound fixes the candidate primes and
orders, the points of order p come from the K-roots of psi_p, and each
p-primary part is closed under division by p through the K-roots of
x([p]Q) = x(P). The invariant factors are read off the point sets.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from sympy import factorint

from ..ecurve.curve import INFINITY, Curve, GroupLawMixin, Point
from ..ecurve.divpoly import division_points_poly, division_polynomial
from ..ecurve.polynomial import roots_in_K
from ..qfield.radical import RadicalElem
from ..utils.errors import ClassificationViolation
from ..utils.logger import get_logger
from .bound import torsion_bound
from .groups import TorsionGroup, najman_list

logger = get_logger(__name__)

# Najman: no point of prime order above 7 over Q(i) or Q(sqrt(-3)).
TORSION_PRIMES = (2, 3, 5, 7)


def _coord_key(c) -> Tuple:
    if isinstance(c, RadicalElem):
        return tuple(x.key() for x in c.coords)
    return c.key()


def point_key(P: Point) -> Tuple:
    """A total order on points: infinity first, then by coordinates."""
    if P.is_infinity:
        return (0,)
    return (1, _coord_key(P.x), _coord_key(P.y))


@dataclass(frozen=True)
class PrimaryPart:
    """
    The p-primary part of E(K)_tors.

    Attributes:
        p: The prime
        orders: Every point of the part with its order
        m: Smaller invariant factor
        n: Larger invariant factor
        generators: One or two generators with trivially intersecting spans
    """

    p: int
    orders: Dict[Point, int]
    m: int
    n: int
    generators: Tuple[Point, ...]


def divide_by(E: Curve, P: Point, p: int) -> List[Point]:
    """
    All Q in E(K) with [p]Q = P, excluding O.

    For P = O these are the K-points of order p.
    """
    if P.is_infinity:
        if p == 2:
            xs = roots_in_K(E.two_division_cubic())
        else:
            xs = roots_in_K(division_polynomial(E, p).poly)
    else:
        xs = roots_in_K(division_points_poly(E, p, P.x))
    found = []
    for x in xs:
        for Q in E.points_with_x(x):
            if E.mul(p, Q) == P:
                found.append(Q)
    return sorted(found, key=point_key)


def primary_points(E: Curve, p: int, max_order: int) -> Dict[Point, int]:
    """
    The points of E(K) of p-power order at most max_order, with their orders.

    Every point Q of the p-primary part has [p]Q in the part, so closing
    {O} under division by p reaches all of it.
    """
    orders: Dict[Point, int] = {INFINITY: 1}
    frontier = [INFINITY]
    while frontier:
        fresh = []
        for P in frontier:
            if orders[P] * p > max_order:
                continue
            for Q in divide_by(E, P, p):
                if Q not in orders:
                    orders[Q] = orders[P] * p
                    fresh.append(Q)
        frontier = sorted(fresh, key=point_key)
    return orders


def primary_structure(E: GroupLawMixin, p: int, orders: Dict[Point, int]) -> PrimaryPart:
    """
    Invariant factors and generators of a p-primary point set.

    Raises:
        ClassificationViolation: If the set is not a group Z/m + Z/n
    """
    size = len(orders)
    n = max(orders.values())
    m = size // n
    if m * n != size or n % m:
        raise ClassificationViolation(
            f"{p}-primary part of {E} has {size} points and exponent {n}",
            evidence={"curve": str(E), "prime": p, "points": [str(P) for P in orders]},
        )
    ranked = sorted(orders, key=point_key)
    g1 = next(P for P in ranked if orders[P] == n)
    generators = (g1,)
    if m > 1:
        r1 = E.mul(n // p, g1)
        span = {E.mul(k, r1) for k in range(1, p)}
        g2 = next(P for P in ranked if orders[P] == m and E.mul(m // p, P) not in span)
        generators = (g1, g2)
    return PrimaryPart(p=p, orders=orders, m=m, n=n, generators=generators)


def combine_parts(E: GroupLawMixin, parts: Sequence[PrimaryPart]) -> TorsionGroup:
    """The direct sum of primary parts, with summed generators."""
    m, n = 1, 1
    g1, g2 = INFINITY, INFINITY
    for part in parts:
        m *= part.m
        n *= part.n
        g1 = E.add(g1, part.generators[0])
        if len(part.generators) > 1:
            g2 = E.add(g2, part.generators[1])
    generators: Tuple[Point, ...] = ()
    if n > 1:
        generators = (g1,) if m == 1 else (g1, g2)
    return TorsionGroup(m, n, generators=generators)


@dataclass(frozen=True)
class TorsionData:
    """E(K)_tors with its bound and primary decomposition."""

    group: TorsionGroup
    bound: int
    parts: Tuple[PrimaryPart, ...]


@lru_cache(maxsize=512)
def torsion_data(E: Curve) -> TorsionData:
    """
    Compute E(K)_tors, its bound and its primary parts.

    Raises:
        ClassificationViolation: If the result is outside Najman's list or
            does not divide the bound
        TorsionBoundError: If the bound cannot be computed
    """
    B = torsion_bound(E)
    parts = []
    for p, e in sorted(factorint(B).items()):
        if p not in TORSION_PRIMES:
            logger.debug(f"Bound {B} for {E} has factor {p}; no K-point of that order exists")
            continue
        part = primary_structure(E, p, primary_points(E, p, p ** e))
        if part.n > 1:
            parts.append(part)
    group = combine_parts(E, parts)

    evidence = {"curve": str(E), "field": E.field.name, "bound": B, "group": group.format()}
    if B % group.order:
        raise ClassificationViolation(f"|E(K)_tors| = {group.order} does not divide the bound {B}", evidence)
    if group not in najman_list(E.field):
        raise ClassificationViolation(f"{group} over {E.field!r} is outside Najman's list", evidence)
    logger.debug(f"E(K)_tors of {E} is {group}")
    return TorsionData(group=group, bound=B, parts=tuple(parts))


def torsion_K(E: Curve) -> TorsionGroup:
    """
    E(K)_tors as Z/m + Z/n with explicit generators.

    Args:
        E: Curve over K

    Returns:
        TorsionGroup whose generators g satisfy [n]g = O and [n/p]g != O
    """
    return torsion_data(E).group


def torsion_points(E: Curve) -> List[Point]:
    """Every point of E(K)_tors, sorted with O first."""
    points = [INFINITY]
    for part in torsion_data(E).parts:
        points = [E.add(P, Q) for P in points for Q in part.orders]
    return sorted(set(points), key=point_key)


def point_order(E: Curve, P: Point, bound: int) -> int:
    """The order of a torsion point, at most bound."""
    order = E.order(P, bound)
    if order is None:
        raise ClassificationViolation(f"{P} has no order <= {bound} on {E}", {"curve": str(E), "point": str(P)})
    return order
