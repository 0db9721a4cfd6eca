"""
Twist Compatibility.

Which torsion groups a curve and its quadratic twist E^(d) can have together
over K: a curve with full 2-torsion and a point of order 3 or 4 forces the
twist down to Z/2+Z/2.
"""

from typing import Dict

from ..qfield.field import FieldElem, QField
from ..qfield.squares import Decision, same_square_class, sqrt_in_K
from ..torsion.groups import TorsionGroup

_TWO_TWO = TorsionGroup(2, 2)

# E(K)_tors -> the only possible E^(d)(K)_tors for a non-square d.
_FORCED_TWIST: Dict[TorsionGroup, TorsionGroup] = {
    TorsionGroup(2, 8): _TWO_TWO,
    TorsionGroup(2, 6): _TWO_TWO,
    TorsionGroup(4, 4): _TWO_TWO,
    TorsionGroup(2, 4): _TWO_TWO,
}


def verify_burt_compatibility(T: TorsionGroup, T_twist: TorsionGroup, field: QField, d: FieldElem) -> Decision:
    """
    Check a pair (E(K)_tors, E^(d)(K)_tors) against the twist table.

    Args:
        T: Torsion of the curve over K
        T_twist: Torsion of the twist by d over K
        field: K
        d: Twist parameter

    Returns:
        Decision; the witness names the table row that was applied
    """
    d = field.coerce(d)
    if sqrt_in_K(d) is not None:
        return Decision(T == T_twist, witness="square twist", rule="twist-table")

    if T == _TWO_TWO:
        return Decision(T_twist.contains(_TWO_TWO), witness="2x2", rule="twist-table")
    if T == TorsionGroup(4, 4) and field.D != -1:
        return Decision(False, witness="4x4 outside Q(i)", rule="twist-table")
    if T == TorsionGroup(2, 4) and field.D == -3 and same_square_class(d, field(-1)):
        ok = T_twist in (TorsionGroup(2, 4), _TWO_TWO)
        return Decision(ok, witness="2x4, d = -1 over Q(sqrt(-3))", rule="twist-table")

    forced = _FORCED_TWIST.get(T)
    if forced is None:
        return Decision(True, witness="not covered", rule="twist-table")
    return Decision(T_twist == forced, witness=T.format(), rule="twist-table")
