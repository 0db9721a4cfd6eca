"""Suites for the modular-curve facts: cusps, inventories, Fermat quartic and the quartic maps."""

from ..modcurves.cusps import cusp_orbits_bruteforce, ogg_cusps
from ..modcurves.diophantine import diophantine_maps_check
from ..modcurves.fermat import FermatSolution, fermat_quartic_search, fermat_quartic_solutions
from ..modcurves.inventories import MODELS, model_point_inventory, quoted_points
from ..modcurves.report import Report
from ..qfield.field import EISENSTEIN, GAUSS
from ..qfield.radical import Tower
from ..qfield.squares import squarefree_part
from .base_suite import BaseSuite

CUSP_TOTALS = {32: 8, 36: 12, 20: 6, 27: 6}
CUSP_ROWS = {
    32: ((1, 1), (2, 1), (4, 2), (8, 2), (16, 1), (32, 1)),
    36: ((1, 1), (2, 1), (3, 2), (4, 1), (6, 2), (9, 1), (12, 2), (18, 1), (36, 1)),
}
CUSPS_OVER_K = {
    (32, "gauss"): 8, (32, "eisenstein"): 4,
    (36, "gauss"): 6, (36, "eisenstein"): 12,
    (20, "gauss"): 6, (20, "eisenstein"): 6,
    (27, "gauss"): 2, (27, "eisenstein"): 6,
}


class CuspsSuite(BaseSuite):
    name = "cusps"
    description = "Ogg's cusp tables of X0(n) for n = 32, 36, 20, 27"

    def run(self) -> Report:
        report = Report(self.name)
        for n, total in CUSP_TOTALS.items():
            table = ogg_cusps(n)
            report.add(f"cusps of X0({n})", "Ogg's formula", total, table.total)
            report.add(f"orbits on P^1(Z/{n})", "cusps as translation orbits", total, cusp_orbits_bruteforce(n))
            if n in CUSP_ROWS:
                report.add(
                    f"cusp table of X0({n})",
                    "cusp table by divisor",
                    [list(row) for row in CUSP_ROWS[n]],
                    [list(row) for row in table.as_pairs()],
                )
            for field in (GAUSS, EISENSTEIN):
                report.add(
                    f"cusps of X0({n}) over {field!r}",
                    "cusps in class d are defined over Q(zeta_gcd(d, n/d))",
                    CUSPS_OVER_K[(n, field.name)],
                    table.rational_over(field),
                )
        return report


class InventoriesSuite(BaseSuite):
    name = "inventories"
    description = "K-points of the genus-one modular curves X0(20), X0(27), X0(32), X0(36)"

    def run(self) -> Report:
        report = Report(self.name)
        for model_id, model in MODELS.items():
            for field in (GAUSS, EISENSTEIN):
                inventory = model_point_inventory(model_id, field)
                report.add(
                    f"|{model_id}({field!r})|",
                    f"{model_id} point count",
                    model.expected[field.name],
                    inventory.count,
                )
                if quoted_points(model_id, field) is not None:
                    report.add(f"{model_id}({field!r}) point list", "quoted coordinates", True, inventory.quoted_match)
                self.logger.debug(f"{model_id} over {field!r}: {inventory.noncuspidal} non-cuspidal points")
        report.notes.append(inventory.note)
        return report


class FermatSuite(BaseSuite):
    name = "fermat"
    description = "Solutions of x^4 + y^4 = 1 over small towers"

    def run(self) -> Report:
        report = Report(self.name)
        known = fermat_quartic_solutions()
        report.add("solutions over Q(i, sqrt(-7))", "x^4 + y^4 = 1 over a quadratic extension of Q(i)", 40, len(known))
        report.add("nontrivial solutions", "(e1(1+e3 w)/2, e2(1-e3 w)/2)", 32, sum(1 for s in known if not s.trivial))

        found = fermat_quartic_search(GAUSS, (-7,), 10)
        report.add(
            "search over Q(i, sqrt(-7)) to height 10",
            "the known solutions are all of them",
            sorted(str(s) for s in known),
            sorted(str(s) for s in found),
        )
        alone = fermat_quartic_search(GAUSS, (), 20)
        report.add("nontrivial solutions over Q(i) to height 20", "only trivial solutions over Q(i)", 0, sum(1 for s in alone if not s.trivial))

        over5 = fermat_quartic_search(EISENSTEIN, (5,), 10)
        K = EISENSTEIN
        root5 = Tower.build(K, [squarefree_part(K(5))]).radical(0)
        target = FermatSolution(root5 * 2 / 5, root5 * K.s / 5)
        report.add(
            "(2/sqrt(5), sqrt(-3)/sqrt(5)) over Q(sqrt(-3), sqrt(5))",
            "16/25 + 9/25 = 1",
            True,
            target in over5,
        )
        return report


class DiophantineSuite(BaseSuite):
    name = "diophantine"
    description = "Trivial solutions of x^4 + y^2 = 1, x^4 - y^4 = z^2 and x^4 + y^4 = z^2"

    def run(self) -> Report:
        return diophantine_maps_check()
