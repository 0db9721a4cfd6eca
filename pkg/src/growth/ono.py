"""
Points of Order 4 and 8 on E(a,b).

Ono's criteria for y^2 = x(x+a)(x+b) over K: a point of order 4 halving
(0,0) exists iff a and b are squares, and one of order 8 above it iff
additionally a ratio built from their roots is well placed. Both are
applied to all three isomorphic forms, since each 2-torsion point can be
moved to (0,0).
"""

from typing import Optional

from ..ecurve.curve import Point
from ..ecurve.twist_form import TwistForm
from ..qfield.field import FieldElem
from ..qfield.rings import ring_elements_up_to_norm
from ..qfield.squares import Decision, same_square_class, sqrt_in_K, squarefree_part
from ..torsion.torsion_k import divide_by
from ..utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_TWIST_NORM_BOUND = 200


def ono_order4(form: TwistForm) -> Decision:
    """
    Whether E(a,b) has a K-point of order 4.

    Such a point doubles to a 2-torsion point; moving that point to (0,0)
    gives a form whose parameters are both squares A^2, B^2, and then
    (AB, AB(A+B)) halves (0,0).

    Returns:
        Decision whose witness is (form, point) on the form's curve
    """
    for alt in form.isomorphic_forms():
        A, B = sqrt_in_K(alt.a), sqrt_in_K(alt.b)
        if A is None or B is None:
            continue
        P = Point(A * B, A * B * (A + B))
        return Decision(True, witness=(alt, P), rule="R7.order4")
    return Decision(False, rule="R7.order4")


def _order8_ratio(alt: TwistForm) -> Optional[FieldElem]:
    A, B = sqrt_in_K(alt.a), sqrt_in_K(alt.b)
    if A is None or B is None:
        return None
    for sign in (1, -1):
        r = B / A * sign
        if r == -1:
            continue
        if sqrt_in_K(r) is not None and sqrt_in_K(r + 1) is not None:
            return r
    return None


def ono_order8(form: TwistForm) -> Decision:
    """
    Whether E(a,b) has a K-point of order 8.

    With a = A^2 and b = B^2 for some isomorphic form, a point of order 8
    exists iff r = +-B/A has r and 1 + r both squares in K (r != -1).

    Returns:
        Decision whose witness is (form, r)
    """
    for alt in form.isomorphic_forms():
        r = _order8_ratio(alt)
        if r is not None:
            return Decision(True, witness=(alt, r), rule="R2")
    return Decision(False, rule="R2")


def exists_twist_order4(form: TwistForm) -> Decision:
    """
    Whether some quadratic twist E(da, db) has a K-point of order 4.

    E(da, db) needs da and db squares for one isomorphic form, which holds
    for some d iff a and b are in the same square class; d = sf(a) works.

    Returns:
        Decision whose witness is the twist parameter d
    """
    for alt in form.isomorphic_forms():
        if same_square_class(alt.a, alt.b):
            d = squarefree_part(alt.a)
            logger.debug(f"{form}: twist by {d} has a point of order 4")
            return Decision(True, witness=d, rule="R6a")
    return Decision(False, rule="R6a")


def brute_force_twist_order4(form: TwistForm, norm_bound: int = DEFAULT_TWIST_NORM_BOUND) -> Decision:
    """
    Search twists E^(d) for a K-point of order 4 directly.

    Every square class with a representative of norm at most norm_bound is
    tried, and a point of order 4 is looked for by halving each 2-torsion
    point of the twist.

    Args:
        form: The curve E(a,b)
        norm_bound: Norm limit for the representatives d

    Returns:
        Decision whose witness is the first d found
    """
    K = form.field
    seen = set()
    for x in ring_elements_up_to_norm(K, norm_bound):
        if x.is_zero():
            continue
        d = squarefree_part(x)
        if d in seen:
            continue
        seen.add(d)
        E = form.twist(d).to_curve()
        for T in divide_by(E, Point(), 2):
            if divide_by(E, T, 2):
                return Decision(True, witness=d, rule="R6a")
    return Decision(False, rule="R6a")
