"""Suites for the finite-field counts, the j-invariants and the Kubert division polynomial."""

from fractions import Fraction
from typing import List

from ..ecurve.curve import Curve, Point, kubert_curve
from ..ecurve.divpoly import division_polynomial
from ..ecurve.genus2 import ORDER7_DESCENT_SEXTIC, genus2_affine_count, genus2_jacobian_order
from ..ecurve.reduction import ResidueMap
from ..modcurves.jinvariants import j_invariant_checks
from ..modcurves.report import Report
from ..qfield.field import GAUSS
from .base_suite import BaseSuite

# (prime of Z[i], residue field size, Jacobian order)
JACOBIAN_PINS = ((GAUSS(2, -1), 5, 79), (GAUSS(2, -3), 13, 171))
SCALE = GAUSS(0, 7)
KUBERT_T = 2


def displayed_psi3(t: Fraction) -> List[Fraction]:
    """The monic third division polynomial of the Kubert curve at t, constant term first."""
    t = Fraction(t)
    return [
        -t ** 9 / 3 + t ** 8 - t ** 7 + t ** 6 / 3,
        t ** 6 - 2 * t ** 5 + t ** 4,
        t ** 5 - 2 * t ** 4 + t ** 2,
        t ** 4 / 3 - 2 * t ** 3 + t ** 2 + Fraction(2, 3) * t + Fraction(1, 3),
        Fraction(1),
    ]


class JacobianSuite(BaseSuite):
    name = "jacobian"
    description = "Point counts of the genus-2 descent curve z^2 = 7i * h(u)"

    def run(self) -> Report:
        report = Report(self.name)
        h = ORDER7_DESCENT_SEXTIC
        for pi, q, order in JACOBIAN_PINS:
            scale = ResidueMap(pi).image(SCALE)
            zeta = genus2_jacobian_order(h, scale, q)
            report.add(f"|J(F_{q})| at {pi}", "Jacobian orders 79 and 171", order, zeta.jacobian_order)
            report.add(
                f"L-polynomial shape over F_{q}",
                "1, c1, c2, q*c1, q^2",
                [1, zeta.c1, zeta.c2, q * zeta.c1, q * q],
                list(zeta.l_polynomial),
            )
        report.add("|J(F_5)| with scale 1", "Jacobian order 79", 79, genus2_jacobian_order(h, 1, 5).jacobian_order)
        for scale in (2, 3):
            report.add(
                f"affine points of z^2 = {scale}h(u) over F_5",
                "no solution over F_5",
                0,
                genus2_affine_count(h, scale, 5),
            )
        return report


class JInvariantSuite(BaseSuite):
    name = "jinv"
    description = "j-invariants of the quoted models and the F_81 point count"

    def run(self) -> Report:
        return j_invariant_checks(strict=False)


class DivisionPolynomialSuite(BaseSuite):
    name = "divpoly"
    description = "Third division polynomial and the order-7 point of the Kubert family"

    def run(self) -> Report:
        report = Report(self.name)
        E: Curve = kubert_curve(GAUSS, KUBERT_T)
        psi3 = division_polynomial(E, 3).monic()
        expected = [str(c) for c in displayed_psi3(Fraction(KUBERT_T))]
        report.add(f"monic psi_3 of E_t at t = {KUBERT_T}", "displayed psi(x, t)", expected, [str(c) for c in psi3.coeffs])

        P = Point(GAUSS(0), GAUSS(0))
        orders = [k for k in range(1, 8) if E.mul(k, P).is_infinity]
        report.add("order of (0, 0) on E_t", "(0, 0) has order 7", [7], orders)
        report.add(
            "degree of psi_7",
            "(n^2 - 1)/2 for odd n",
            24,
            division_polynomial(E, 7).degree,
        )
        return report
