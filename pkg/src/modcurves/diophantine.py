"""
Trivial-Solution Checks for Three Quartic Equations.

Each equation maps to an elliptic curve of rank 0 over K, so its
K-solutions are found in the fibers over finitely many torsion points.

    x^4 + y^2 = 1     ->  y^2 = x^3 + 4x,  (x, y) -> (2x^2/(1-y), 4x/(1-y))
    x^4 - y^4 = z^2   ->  y^2 = x^3 + 4x,  (x, y, z) -> (2y^2/(x^2-z), 4xy/(x^2-z))
    x^4 + y^4 = z^2   ->  y^2 = x^3 - 4x,  (x, y, z) -> (-2x^2/(y^2-z), 4xy/(y^2-z))

The last one only over Q(i). Solutions are taken up to (x, y, z) ~ (tx, ty, t^2 z),
so the homogeneous fibers are computed with one coordinate set to 1.
"""

from typing import List, Optional, Tuple

from ..ecurve.curve import Curve, Point
from ..qfield.field import EISENSTEIN, GAUSS, FieldElem, QField
from ..torsion.torsion_k import point_key, torsion_points
from ..utils.errors import ClassificationViolation
from ..utils.logger import get_logger
from .report import Report

logger = get_logger(__name__)

PLUS_FOUR = (0, 0, 0, 4, 0)
MINUS_FOUR = (0, 0, 0, -4, 0)


def affine_points(field: QField, coeffs) -> List[Point]:
    """Affine K-points of a rank-0 curve (its torsion points other than O)."""
    E = Curve(field, list(coeffs))
    return [P for P in torsion_points(E) if not P.is_infinity]


def _plus_fiber(P: Point) -> Optional[Tuple[FieldElem, FieldElem]]:
    """(x, y) with 2x^2/(1-y) = X and 4x/(1-y) = Y, when it exists and lies on x^4 + y^2 = 1."""
    X, Y = P.x, P.y
    K = X.field
    if Y.is_zero():
        # 4x/(1-y) = 0 forces x = 0 and then X = 0; y = -1 is the only root of y^2 = 1 with y != 1
        return (K.zero, K(-1)) if X.is_zero() else None
    x = 2 * X / Y
    y = 1 - 4 * x / Y
    if y == 1 or x ** 4 + y * y != 1:
        return None
    return x, y


def _minus_fiber(P: Point) -> Optional[Tuple[FieldElem, FieldElem]]:
    """(x, z) with y = 1 and -2x^2/(1-z) = X, 4x/(1-z) = Y, on x^4 + 1 = z^2."""
    X, Y = P.x, P.y
    K = X.field
    if Y.is_zero():
        return (K.zero, K(-1)) if X.is_zero() else None
    x = -2 * X / Y
    z = 1 - 4 * x / Y
    if z == 1 or x ** 4 + 1 != z * z:
        return None
    return x, z


def _require_trivial(report: Report, equation: str, field: QField, fibers: List[Tuple[str, Tuple]]):
    for image, solution in fibers:
        nontrivial = all(not c.is_zero() for c in solution)
        report.add(
            f"{equation} over {field!r}: fiber over {image}",
            f"only trivial solutions of {equation} over {field!r}",
            "trivial",
            "nontrivial" if nontrivial else "trivial",
        )
        if nontrivial:
            raise ClassificationViolation(
                f"Nontrivial solution {tuple(str(c) for c in solution)} of {equation} over {field!r}",
                {"equation": equation, "field": field.name, "image": image},
            )


def _fourth_plus_square(report: Report, field: QField):
    fibers = []
    for P in affine_points(field, PLUS_FOUR):
        found = _plus_fiber(P)
        if found is not None:
            fibers.append((str(P), found))
    # y = 1 is where the map is undefined: x^4 = 0
    fibers.append(("undefined locus y = 1", (field.zero, field.one)))
    solutions = sorted({s for _, s in fibers}, key=lambda s: (s[0].key(), s[1].key()))
    logger.debug(f"x^4 + y^2 = 1 over {field!r}: {[tuple(map(str, s)) for s in solutions]}")
    _require_trivial(report, "x^4 + y^2 = 1", field, fibers)


def _difference(report: Report, field: QField):
    # With x = 1 the fiber over (X, Y) is (1, y, z) with (y, z) a solution of y^4 + z^2 = 1
    fibers = []
    for P in affine_points(field, PLUS_FOUR):
        found = _plus_fiber(P)
        if found is not None:
            fibers.append((str(P), (field.one,) + found))
    _require_trivial(report, "x^4 - y^4 = z^2", field, fibers)


def _sum_of_fourths(report: Report):
    field = GAUSS
    points = affine_points(field, MINUS_FOUR)
    expected = sorted([Point(field(0), field(0)), Point(field(2), field(0)), Point(field(-2), field(0))], key=point_key)
    report.add(
        "affine points of y^2 = x^3 - 4x over Q(i)",
        "y^2 = x^3 - 4x has three affine Q(i)-points",
        [str(P) for P in expected],
        [str(P) for P in sorted(points, key=point_key)],
    )
    fibers = []
    for P in points:
        found = _minus_fiber(P)
        if found is not None:
            fibers.append((str(P), (found[0], field.one, found[1])))
    _require_trivial(report, "x^4 + y^4 = z^2", field, fibers)


def diophantine_maps_check() -> Report:
    """
    Pull the K-points of y^2 = x^3 +- 4x back along the three maps.

    Returns:
        Report listing each fiber with its triviality, plus the point list of
        y^2 = x^3 - 4x over Q(i)

    Raises:
        ClassificationViolation: If any fiber holds a nontrivial solution
    """
    report = Report("diophantine")
    for field in (GAUSS, EISENSTEIN):
        inventory = affine_points(field, PLUS_FOUR)
        report.add(
            f"affine points of y^2 = x^3 + 4x over {field!r}",
            "X0(32) point counts",
            7 if field is GAUSS else 3,
            len(inventory),
        )
        _fourth_plus_square(report, field)
        _difference(report, field)
    _sum_of_fourths(report)
    report.notes.append("Both curves are assumed to have rank 0 over K.")
    return report
