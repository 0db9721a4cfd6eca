"""
Odd Torsion over F.

A point of odd order in E(F) lies, up to the twist decomposition, in some
E^(d)(K); its x-coordinate scaled back is a K-root of the division
polynomial. So the odd part of E(F) is read off from the K-roots of
psi_3, psi_5, psi_7 and psi_9/psi_3.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..ecurve.curve import Curve, Point
from ..ecurve.divpoly import division_polynomial
from ..ecurve.polynomial import roots_in_K
from ..qfield.field import FieldElem
from ..qfield.squares import sqrt_in_K, squarefree_part
from ..torsion.groups import TorsionGroup
from ..utils.errors import ClassificationViolation
from ..utils.logger import get_logger

logger = get_logger(__name__)

ODD_PRIMES = (3, 5, 7)

ALLOWED_ODD = (
    TorsionGroup(1, 1),
    TorsionGroup(1, 3),
    TorsionGroup(1, 5),
    TorsionGroup(1, 7),
    TorsionGroup(1, 9),
    TorsionGroup(1, 15),
    TorsionGroup(3, 3),
)


@dataclass(frozen=True)
class OddTwistWitness:
    """
    A twist carrying a K-point of odd prime order.

    Attributes:
        p: The prime
        x0: K-root of psi_p on the two-division model
        d: Square-free twist parameter, the class of g(x0)
        twist: E^(d) on the two-division model
        point: (d*x0, d^2*w) with g(x0) = d*w^2, of order p on the twist
    """

    p: int
    x0: FieldElem
    d: FieldElem
    twist: Curve
    point: Point


@dataclass(frozen=True)
class OddGrowth:
    """The odd part of E(F)_tors with the roots that decided it."""

    group: TorsionGroup
    roots: Dict[int, Tuple[FieldElem, ...]] = field(default_factory=dict)
    nine_roots: Tuple[FieldElem, ...] = ()


def psi_roots(E: Curve, p: int) -> List[FieldElem]:
    """K-roots of psi_p."""
    return roots_in_K(division_polynomial(E, p).poly)


def cyclic_subgroup_count(p: int, roots: Sequence[FieldElem]) -> int:
    """
    The number of order-p subgroups whose points have x-coordinates among roots.

    A cyclic subgroup of odd prime order p has (p - 1)/2 distinct
    x-coordinates, and all of them lie in K once one does.

    Raises:
        ClassificationViolation: If the roots do not split into whole subgroups
    """
    per_subgroup = (p - 1) // 2
    count, leftover = divmod(len(roots), per_subgroup)
    if leftover:
        raise ClassificationViolation(
            f"psi_{p} has {len(roots)} K-roots, not a multiple of {per_subgroup}",
            {f"psi_{p}": [str(x) for x in roots]},
        )
    return count


def _nine_roots(E: Curve) -> List[FieldElem]:
    psi9 = division_polynomial(E, 9).poly
    psi3 = division_polynomial(E, 3).poly
    quotient, remainder = psi9.divmod(psi3)
    if not remainder.is_zero():
        raise ClassificationViolation("psi_3 does not divide psi_9", {"curve": str(E)})
    return roots_in_K(quotient)


def odd_growth(E: Curve) -> OddGrowth:
    """
    Decide the odd part of E(F)_tors.

    Raises:
        ClassificationViolation: If the roots describe a group outside
            1, 3, 5, 7, 9, 15 and Z/3+Z/3
    """
    model = E.two_division_model()
    roots = {p: tuple(psi_roots(model, p)) for p in ODD_PRIMES}
    evidence = {"curve": str(E), "field": E.field.name, **{f"psi_{p}": [str(x) for x in r] for p, r in roots.items()}}

    for p in (5, 7):
        subgroups = cyclic_subgroup_count(p, roots[p])
        if subgroups >= 2:
            raise ClassificationViolation(f"psi_{p} roots give {subgroups} subgroups of order {p}: Z/{p}+Z/{p} in E(F)", evidence)

    nine: Tuple[FieldElem, ...] = ()
    if cyclic_subgroup_count(3, roots[3]) >= 2:
        three = TorsionGroup(3, 3)
    elif roots[3]:
        three = TorsionGroup(1, 3)
    else:
        three = TorsionGroup(1, 1)
    if roots[3]:
        nine = tuple(_nine_roots(model))
        if nine:
            three = TorsionGroup.of(three.m, 9)

    group = three
    for p in (5, 7):
        if roots[p]:
            group = group.direct_sum(TorsionGroup(1, p))
    if group not in ALLOWED_ODD:
        evidence["group"] = group.format()
        raise ClassificationViolation(f"Odd part {group} of E(F) is not an allowed odd group", evidence)
    logger.debug(f"Odd part of E(F) for {E}: {group}")
    return OddGrowth(group=group, roots=roots, nine_roots=nine)


def odd_part_F(E: Curve) -> TorsionGroup:
    """
    The odd part of E(F)_tors.

    Args:
        E: Curve over K

    Returns:
        One of 1, 3, 5, 7, 9, 15 or Z/3+Z/3
    """
    return odd_growth(E).group


def odd_twist_witnesses(E: Curve) -> List[OddTwistWitness]:
    """
    For every K-root x0 of psi_p (p = 3, 5, 7), the twist realizing it over K.

    Each witness point is checked to have exact order p by scalar
    multiplication on the twist.

    Raises:
        ClassificationViolation: If a witness fails the order check
    """
    model = E.two_division_model()
    g = model.two_division_cubic()
    witnesses = []
    for p in ODD_PRIMES:
        for x0 in psi_roots(model, p):
            value = g(x0)
            d = squarefree_part(value)
            w = sqrt_in_K(value / d)
            twist = model.quadratic_twist(d)
            Q = Point(d * x0, d * d * w)
            if not twist.is_on(Q) or not twist.mul(p, Q).is_infinity:
                raise ClassificationViolation(
                    f"{Q} on the twist by {d} does not have order {p}",
                    {"curve": str(E), "twist": str(twist), "point": str(Q)},
                )
            witnesses.append(OddTwistWitness(p=p, x0=x0, d=d, twist=twist, point=Q))
    return witnesses
