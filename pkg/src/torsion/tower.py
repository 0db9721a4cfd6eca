"""
Torsion over a Multiquadratic Extension.

A brute-force oracle for E(L)_tors with L = K(sqrt(d1), sqrt(d2)), used to
cross-check the growth classifier. Every x-coordinate is an L-root of a
division polynomial factored over K, and every y-coordinate is a square
root taken in L. The 2-primary part grows by division by 2 through the
duplication map; the odd parts come from psi_p and psi_9.
"""

from typing import Dict, List, Optional, Sequence

from ..ecurve.curve import INFINITY, Curve, Point
from ..ecurve.divpoly import division_polynomial, multiplication_x_map
from ..ecurve.polynomial import KPoly, roots_in_tower
from ..qfield.radical import RadicalElem, Tower, tower_sqrt
from ..qfield.squares import squarefree_part
from ..utils.config import get_settings
from ..utils.errors import ClassificationViolation, InvalidInputError, TowerDepthError
from ..utils.logger import get_logger
from .groups import TorsionGroup
from .torsion_k import PrimaryPart, combine_parts, point_key, primary_structure

logger = get_logger(__name__)

MAX_RADICANDS = 2


def _largest_power(p: int, cap: int) -> int:
    q = 1
    while q * p <= cap:
        q *= p
    return q


def galois_conjugate(z: RadicalElem, flip: int) -> RadicalElem:
    """The image of z under sqrt(d_j) -> -sqrt(d_j) for every bit j set in flip."""
    coords = tuple(-c if bin(mask & flip).count("1") % 2 else c for mask, c in enumerate(z.coords))
    return RadicalElem(z.tower, coords)


def _mul_lists(f: List[RadicalElem], g: List[RadicalElem], zero: RadicalElem) -> List[RadicalElem]:
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def halving_polynomial(model: Curve, x_Q: RadicalElem) -> KPoly:
    """
    N_{L/K}(phi(t) - x(Q)*den(t)) for the duplication map x([2]P) = phi/den.

    Its L-roots contain every x(P) with [2]P = +-Q, together with the
    roots belonging to the Galois conjugates of Q.
    """
    L = x_Q.tower
    phi, den = multiplication_x_map(model, 2)
    width = max(len(phi.coeffs), len(den.coeffs))
    zero = model.field.zero
    local = [
        L.lift(phi.coeffs[i] if i < len(phi.coeffs) else zero) - x_Q * (den.coeffs[i] if i < len(den.coeffs) else zero)
        for i in range(width)
    ]
    norm = [L.one()]
    for flip in range(L.size):
        norm = _mul_lists(norm, [galois_conjugate(c, flip) for c in local], L.zero())
    return KPoly(model.field, tuple(c.base_value() for c in norm))


def _points_with_x(model: Curve, xs: Sequence[RadicalElem]) -> List[Point]:
    g = model.two_division_cubic()
    points = []
    for x in xs:
        y = tower_sqrt(g(x))
        if y is None:
            continue
        points.append(Point(x, y))
        if not y.is_zero():
            points.append(Point(x, -y))
    return points


def _halves(model: Curve, Q: Point, L: Tower) -> List[Point]:
    phi, den = multiplication_x_map(model, 2)
    xs = [
        x for x in roots_in_tower(halving_polynomial(model, Q.x), L)
        if not den(x).is_zero() and (phi(x) - Q.x * den(x)).is_zero()
    ]
    return [P for P in _points_with_x(model, xs) if model.mul(2, P) in (Q, model.neg(Q))]


def _two_primary(model: Curve, L: Tower, cap: int) -> Dict[Point, int]:
    orders: Dict[Point, int] = {INFINITY: 1}
    if cap < 2:
        return orders
    for T in _points_with_x(model, roots_in_tower(model.two_division_cubic(), L)):
        orders[T] = 2

    frontier = sorted((P for P, n in orders.items() if n == 2), key=point_key)
    while frontier:
        fresh = []
        done = set()
        for Q in frontier:
            if orders[Q] * 2 > cap or Q.x in done:
                continue
            done.add(Q.x)
            for P in _halves(model, Q, L):
                if P not in orders:
                    orders[P] = orders[Q] * 2
                    fresh.append(P)
        frontier = sorted(fresh, key=point_key)
    return orders


def _odd_primary(model: Curve, L: Tower, p: int, cap: int) -> Dict[Point, int]:
    orders: Dict[Point, int] = {INFINITY: 1}
    k = p
    while k <= cap:
        if k > p and k // p not in orders.values():
            break
        xs = roots_in_tower(division_polynomial(model, k).poly, L)
        for P in _points_with_x(model, xs):
            if P in orders:
                continue
            order = model.order(P, k)
            if order is None:
                raise ClassificationViolation(
                    f"{P} is a root of psi_{k} without order dividing {k}", {"curve": str(model), "point": str(P)}
                )
            orders[P] = order
        k *= p
    return orders


def tower_torsion(E: Curve, radicands: Sequence, order_cap: Optional[int] = None) -> TorsionGroup:
    """
    E(L)_tors for L = K(sqrt(d) : d in radicands), up to points of order order_cap.

    Args:
        E: Curve over K
        radicands: At most two elements of K, independent modulo squares
        order_cap: Largest point order searched (defaults to the configured cap)

    Returns:
        TorsionGroup on the two-division model of E, with generators in L

    Raises:
        TowerDepthError: If more than two radicands are given
        DependentRadicandError: If the radicands are dependent or a square
        InvalidInputError: If the cap exceeds the configured maximum
    """
    limit = get_settings().tower_order_cap
    cap = order_cap if order_cap is not None else limit
    if cap < 1 or cap > limit:
        raise InvalidInputError(f"Order cap {cap} outside 1..{limit}")
    if len(radicands) > MAX_RADICANDS:
        raise TowerDepthError(f"The oracle adjoins at most {MAX_RADICANDS} square roots, got {len(radicands)}")

    K = E.field
    L = Tower.build(K, [squarefree_part(K.coerce(d)) for d in radicands])
    model = E.two_division_model()

    parts: List[PrimaryPart] = []
    two = primary_structure(model, 2, _two_primary(model, L, _largest_power(2, cap)))
    if two.n > 1:
        parts.append(two)
    # Twists over K have no points of prime order above 7.
    for p in (3, 5, 7):
        if p > cap:
            break
        part = primary_structure(model, p, _odd_primary(model, L, p, _largest_power(p, cap)))
        if part.n > 1:
            parts.append(part)

    group = combine_parts(model, parts)
    logger.debug(f"E(L)_tors of {E} over {L} (orders <= {cap}): {group}")
    return group
