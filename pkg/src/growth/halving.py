"""
Torsion Growth of the 2-Part.

The halving-height engine. Starting from a basis of E[2] it keeps halving
basis elements (or their sum) while the required square roots exist in F,
growing a single radical tower as new square roots appear.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from ..ecurve.curve import Curve, Point
from ..ecurve.halving import TwoTorsionFrame, knapp_halving, two_torsion_frame
from ..qfield.field import FieldElem
from ..qfield.radical import Tower, is_square_in_F
from ..qfield.squares import Decision, same_square_class, sqrt_i_multiple_never_square, sqrt_is_square_in_F
from ..torsion.groups import TorsionGroup
from ..utils.errors import ClassificationViolation, TowerDepthError
from ..utils.logger import get_logger

logger = get_logger(__name__)

MAX_TWO_POWER = 64


def decide_square_in_F(z) -> Decision:
    """
    Whether an element of a radical tower is a square in F, citing the deciding rule.

    Elements of K are squares in F. A pure radical c*sqrt(d) is sqrt(x) for
    x = c^2*d in K. Over Q(sqrt(-3)) the square roots of a*i are never
    squares. Everything else goes through the Kummer criterion.
    """
    if isinstance(z, FieldElem) or z.is_zero() or z.in_base():
        return Decision(True, rule="R7.kummer")
    w = z.compress()
    square = (w * w).compress()
    if square.in_base():
        verdict = sqrt_is_square_in_F(square.base_value())
        return Decision(verdict.holds, witness=verdict.witness, rule="R7.square", radicands=verdict.radicands)
    K = w.field
    if K.D == -3:
        if (
            square.tower.depth == 1
            and same_square_class(square.tower.radicands[0], K(-1))
            and square.coords[0].is_zero()
        ):
            verdict = sqrt_i_multiple_never_square(square)
            return Decision(verdict.holds, rule="R7.square_i")
    return Decision(is_square_in_F(w), rule="R7.kummer")


@dataclass(frozen=True)
class HalvingDecision:
    """One squareness question asked by the engine."""

    label: str
    element: str
    holds: bool
    rule: str


@dataclass(frozen=True)
class TwoPowerGrowth:
    """
    The 2-part of E(F)_tors found by the halving-height engine.

    Attributes:
        orders: Orders of the two basis points, smaller first
        exact: False when a halving could not be carried out within the depth cap
        grows_further: When inexact, whether the group is known to be larger
        decisions: Every squareness question with its answer and rule
        radicands: Radicands of the tower holding the basis
        basis: The basis points on the two-division model
    """

    orders: Tuple[int, int]
    exact: bool
    grows_further: bool = False
    decisions: Tuple[HalvingDecision, ...] = ()
    radicands: Tuple[FieldElem, ...] = ()
    basis: Tuple[Point, ...] = field(default=(), compare=False)

    @property
    def group(self) -> TorsionGroup:
        return TorsionGroup(*self.orders)

    def rules_cited(self) -> List[str]:
        seen: List[str] = []
        for d in self.decisions:
            if d.rule not in seen:
                seen.append(d.rule)
        return seen


def _halve(frame: TwoTorsionFrame, P: Point, tower: Tower) -> Tuple[Tower, Point]:
    result = knapp_halving(frame, P, tower, extend=True)
    if not result.halves:
        raise ClassificationViolation(
            f"{P} passed the halving test but no half was found",
            evidence={"curve": str(frame.model), "point": str(P), "tower": str(tower)},
        )
    return result.tower, result.halves[0]


def two_power_growth(E: Curve, max_order: int = MAX_TWO_POWER) -> TwoPowerGrowth:
    """
    E(F)_(2) as Z/2^a + Z/2^b by repeated halving over F.

    With H = <P1, P2> containing E[2], some point of E(F) \\ H halves into H
    unless H is everything, and a point of H halves in F iff its class in
    H/2H does; so it suffices to test P1, P2 and P1 + P2.

    Args:
        E: Curve over K
        max_order: Stop once a basis point reaches this order

    Returns:
        TwoPowerGrowth with an exactness flag
    """
    frame = two_torsion_frame(E)
    if frame is None:
        return TwoPowerGrowth(orders=(1, 1), exact=True)

    model = frame.model
    tower = frame.tower
    P1 = Point(frame.roots[0], tower.zero())
    P2 = Point(frame.roots[1], tower.zero())
    o1 = o2 = 2
    decisions: List[HalvingDecision] = []
    exact, grows = True, False

    while max(o1, o2) < max_order:
        candidates = (("P1", P1), ("P2", P2), ("P1+P2", model.add(P1, P2)))
        halvable = {}
        for label, R in candidates:
            ok = True
            for e in frame.roots_in(tower):
                z = tower.embed(R.x) - e
                verdict = decide_square_in_F(z)
                decisions.append(HalvingDecision(label, str(z), verdict.holds, verdict.rule))
                if not verdict.holds:
                    ok = False
                    break
            halvable[label] = ok
        if not any(halvable.values()):
            break
        try:
            if halvable["P1"] and halvable["P2"]:
                tower, P1 = _halve(frame, P1, tower)
                tower, P2 = _halve(frame, P2, tower)
                o1, o2 = 2 * o1, 2 * o2
            elif halvable["P1"]:
                tower, P1 = _halve(frame, P1, tower)
                o1 *= 2
            elif halvable["P2"]:
                tower, P2 = _halve(frame, P2, tower)
                o2 *= 2
            else:
                tower, S = _halve(frame, candidates[2][1], tower)
                top = 2 * max(o1, o2)
                if o1 >= o2:
                    P1, o1 = S, top
                else:
                    P2, o2 = S, top
        except TowerDepthError as exc:
            logger.debug(f"Halving engine stopped at orders ({o1}, {o2}) for {E}: {exc}")
            exact, grows = False, True
            break

    orders = tuple(sorted((o1, o2)))
    logger.debug(f"2-part of E(F) for {E}: {orders} ({'exact' if exact else 'lower bound'})")
    return TwoPowerGrowth(
        orders=orders,
        exact=exact,
        grows_further=grows,
        decisions=tuple(decisions),
        radicands=tower.radicands,
        basis=(P1, P2),
    )
