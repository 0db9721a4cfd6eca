"""Verification suites, one per group of reproduced facts."""

from typing import Dict, List, Type

from .arithmetic import DivisionPolynomialSuite, JacobianSuite, JInvariantSuite
from .base_suite import BaseSuite
from .growth import GrowthSuite
from .modular import CuspsSuite, DiophantineSuite, FermatSuite, InventoriesSuite

SUITES: Dict[str, Type[BaseSuite]] = {
    suite.name: suite
    for suite in (
        CuspsSuite,
        InventoriesSuite,
        FermatSuite,
        JacobianSuite,
        JInvariantSuite,
        DivisionPolynomialSuite,
        GrowthSuite,
        DiophantineSuite,
    )
}


def build_suites(names: List[str]) -> List[BaseSuite]:
    """Instantiate the named suites, in the order given."""
    return [SUITES[name]() for name in names]


__all__ = [
    "BaseSuite", "CuspsSuite", "InventoriesSuite", "FermatSuite", "JacobianSuite", "JInvariantSuite",
    "DivisionPolynomialSuite", "GrowthSuite", "DiophantineSuite", "SUITES", "build_suites",
]
