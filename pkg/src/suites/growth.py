"""Suite for the torsion-growth classification pins."""

from typing import Tuple

from ..ecurve.curve import Curve
from ..ecurve.twist_form import twist_form_of
from ..growth.classifier import classify_growth, replay_certificate
from ..growth.ono import brute_force_twist_order4, exists_twist_order4
from ..modcurves.report import Report
from ..qfield.field import EISENSTEIN, GAUSS, QField
from ..torsion.groups import theorem_main_list
from .base_suite import BaseSuite

# (label, field, curve, E(K)_tors, E(F)_tors)
PINS: Tuple[Tuple[str, QField, str, str, str], ...] = (
    ("y^2 = x^3 + 4x", GAUSS, "[0,0,0,4,0]", "2x4", "4x8"),
    ("y^2 = x^3 + 1", EISENSTEIN, "[0,0,0,0,1]", "2x6", "4x12"),
    ("E(81, 256)", GAUSS, "[0,337,0,20736,0]", "2x8", "4x16"),
    ("E(81, 256)", EISENSTEIN, "[0,337,0,20736,0]", "2x8", "4x16"),
    ("E(9, 16)", EISENSTEIN, "[0,25,0,144,0]", "2x8", "4x16"),
    ("E(9, 25)", GAUSS, "[0,34,0,225,0]", "4x4", "8x8"),
)

TWIST_SCAN_BOUND = 50


class GrowthSuite(BaseSuite):
    name = "growth"
    description = "E(F)_tors for curves whose growth is pinned down"

    def run(self) -> Report:
        report = Report(self.name)
        for label, field, text, torsion_K, torsion_F in PINS:
            E = Curve.parse(text, field)
            result = classify_growth(E)
            where = f"{label} over {field!r}"
            report.add(f"E(K)_tors of {where}", "torsion over K", torsion_K, result.torsion_K.format())
            report.add(
                f"E(F)_tors of {where}",
                " then ".join(result.certificate.rule_ids()),
                torsion_F,
                result.exact.format() if result.exact is not None else None,
            )
            report.add(f"{where} in the main list", "classification over F", True, result.exact in theorem_main_list(field))
            report.add(f"certificate replay for {where}", "replayable certificate", True, replay_certificate(E, result))

            form = twist_form_of(E)
            criterion = exists_twist_order4(form)
            scan = brute_force_twist_order4(form, TWIST_SCAN_BOUND)
            report.add(
                f"twist with a point of order 4, {where}",
                "square-class criterion against a direct scan",
                scan.holds,
                criterion.holds,
            )
        return report
