"""Torsion subgroups over K and over small multiquadratic extensions."""

from .bound import TorsionBound, torsion_bound, torsion_bound_report
from .groups import (
    FORBIDDEN_SUBGROUPS,
    MAZUR_GROUPS,
    TorsionGroup,
    forbidden_subgroup,
    is_subgroup,
    najman_list,
    theorem_main_list,
)
from .torsion_k import (
    TORSION_PRIMES,
    PrimaryPart,
    TorsionData,
    divide_by,
    point_key,
    point_order,
    primary_points,
    torsion_data,
    torsion_K,
    torsion_points,
)
from .tower import tower_torsion

__all__ = [
    "TorsionBound",
    "torsion_bound",
    "torsion_bound_report",
    "FORBIDDEN_SUBGROUPS",
    "MAZUR_GROUPS",
    "TorsionGroup",
    "forbidden_subgroup",
    "is_subgroup",
    "najman_list",
    "theorem_main_list",
    "TORSION_PRIMES",
    "PrimaryPart",
    "TorsionData",
    "divide_by",
    "point_key",
    "point_order",
    "primary_points",
    "torsion_data",
    "torsion_K",
    "torsion_points",
    "tower_torsion",
]
