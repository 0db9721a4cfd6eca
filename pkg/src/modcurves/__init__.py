"""Cusps, point inventories and Diophantine checks for the modular curves."""

from .cusps import CuspRow, CuspTable, cusp_orbits_bruteforce, ogg_cusps
from .diophantine import affine_points, diophantine_maps_check
from .fermat import FermatSolution, fermat_quartic_search, fermat_quartic_solutions, height, search_grid
from .inventories import MODELS, RANK_ZERO_NOTE, Inventory, ModularModel, model_point_inventory, quoted_points
from .jinvariants import j_invariant_checks
from .report import Check, Report

__all__ = [
    "CuspRow", "CuspTable", "cusp_orbits_bruteforce", "ogg_cusps", "affine_points",
    "diophantine_maps_check", "FermatSolution", "fermat_quartic_search", "fermat_quartic_solutions",
    "height", "search_grid", "MODELS", "RANK_ZERO_NOTE", "Inventory", "ModularModel",
    "model_point_inventory", "quoted_points", "j_invariant_checks", "Check", "Report",
]
