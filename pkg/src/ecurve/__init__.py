"""Elliptic curves over K and over finite fields."""

from .curve import INFINITY, Curve, GroupLawMixin, Point, group_add, kubert_curve, quadratic_twist, scalar_mul
from .divpoly import DivisionPoly, division_points_poly, division_polynomial, multiplication_x_map
from .finite_field import (
    FFCurve,
    FFElem,
    FiniteField,
    base_change,
    count_points,
    count_points_extension,
    get_field,
    twist_over_ff,
)
from .genus2 import ORDER7_DESCENT_SEXTIC, ZetaData, genus2_affine_count, genus2_jacobian_order
from .halving import Halving, TwoTorsionFrame, knapp_halving, two_torsion_frame
from .polynomial import KPoly, cubic_roots_in_K, factor_over_K, poly_from_ints, roots_in_K, roots_in_tower
from .reduction import ReducedCurve, ResidueMap, minimal_model_at, reduce_curve
from .twist_form import TwistForm, TwoTorsionSplit, twist_form_of, two_torsion_split

__all__ = [
    "INFINITY", "Curve", "GroupLawMixin", "Point", "group_add", "kubert_curve", "quadratic_twist",
    "scalar_mul", "DivisionPoly", "division_points_poly", "division_polynomial",
    "multiplication_x_map", "FFCurve", "FFElem", "FiniteField", "base_change", "count_points",
    "count_points_extension", "get_field", "ORDER7_DESCENT_SEXTIC", "ZetaData",
    "genus2_affine_count", "genus2_jacobian_order", "Halving", "TwoTorsionFrame",
    "knapp_halving", "two_torsion_frame", "KPoly", "cubic_roots_in_K", "factor_over_K", "poly_from_ints",
    "roots_in_K", "roots_in_tower", "ReducedCurve", "ResidueMap", "minimal_model_at", "reduce_curve", "TwistForm",
    "TwoTorsionSplit", "twist_form_of", "two_torsion_split", "twist_over_ff",
]
