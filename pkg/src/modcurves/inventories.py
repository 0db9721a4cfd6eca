"""
Points on Genus-One Modular Curves.

X0(20), X0(27), X0(32) and X0(36) are elliptic curves of rank 0 over
Q(i) and Q(sqrt(-3)), so their K-points are the torsion points. Counting
them against Ogg's cusps shows which levels carry non-cuspidal points.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..ecurve.curve import Curve, Point
from ..qfield.field import QField
from ..torsion.torsion_k import point_key, torsion_points
from ..utils.errors import ClassificationViolation, InvalidInputError
from ..utils.logger import get_logger
from .cusps import ogg_cusps

logger = get_logger(__name__)

RANK_ZERO_NOTE = (
    "The Mordell-Weil rank over K is taken to be 0, so the K-points are the torsion points; "
    "the rank is not recomputed here."
)


@dataclass(frozen=True)
class ModularModel:
    """A Weierstrass model of X0(level) with its expected point counts per field."""

    model_id: str
    level: int
    coeffs: Tuple[int, int, int, int, int]
    expected: Dict[str, int]


MODELS: Dict[str, ModularModel] = {
    "X20": ModularModel("X20", 20, (0, 1, 0, 4, 4), {"gauss": 12, "eisenstein": 6}),
    "X27": ModularModel("X27", 27, (0, 0, 1, 0, -7), {"gauss": 3, "eisenstein": 9}),
    "X32": ModularModel("X32", 32, (0, 0, 0, 4, 0), {"gauss": 8, "eisenstein": 4}),
    "X36": ModularModel("X36", 36, (0, 0, 0, 0, 1), {"gauss": 6, "eisenstein": 12}),
}

# Coordinates as quoted, s = sqrt(D) of the field; "O" is the point at infinity.
QUOTED_POINTS: Dict[Tuple[str, str], Tuple[Tuple[str, ...], ...]] = {
    ("X32", "gauss"): (
        ("O",), ("0", "0"), ("2", "4"), ("2", "-4"),
        ("2*s", "0"), ("-2*s", "0"), ("-2", "4*s"), ("-2", "-4*s"),
    ),
    ("X20", "gauss"): (
        ("O",), ("-1", "0"), ("0", "2"), ("0", "-2"), ("4", "10"), ("4", "-10"),
        ("2*s", "0"), ("-2*s", "0"),
        ("-2+2*s", "4+2*s"), ("-2+2*s", "-4-2*s"),
        ("-2-2*s", "-4+2*s"), ("-2-2*s", "4-2*s"),
    ),
}


@dataclass(frozen=True)
class Inventory:
    """
    The K-points of a modular model.

    Attributes:
        model_id: Key into MODELS
        field: The field K
        curve: The model
        points: Every K-point, O first
        expected: The stated count, when one exists
        cusps: Number of cusps defined over K
        quoted_match: Set-wise agreement with the quoted coordinate list, if one exists
        note: The rank-0 dependency
    """

    model_id: str
    field: QField
    curve: Curve
    points: Tuple[Point, ...]
    expected: Optional[int]
    cusps: int
    quoted_match: Optional[bool]
    note: str = RANK_ZERO_NOTE

    @property
    def count(self) -> int:
        return len(self.points)

    @property
    def noncuspidal(self) -> int:
        return self.count - self.cusps

    def to_dict(self) -> Dict:
        return {
            "model": self.model_id,
            "field": self.field.name,
            "curve": str(self.curve),
            "count": self.count,
            "expected": self.expected,
            "cusps": self.cusps,
            "noncuspidal": self.noncuspidal,
            "quoted_match": self.quoted_match,
            "points": [str(P) for P in self.points],
            "note": self.note,
        }


def quoted_points(model_id: str, field: QField) -> Optional[List[Point]]:
    """The quoted point list for a model over a field, parsed."""
    quoted = QUOTED_POINTS.get((model_id, field.name))
    if quoted is None:
        return None
    points = []
    for entry in quoted:
        if entry == ("O",):
            points.append(Point())
        else:
            points.append(Point(field.parse(entry[0]), field.parse(entry[1])))
    return points


def model_point_inventory(model_id: str, field: QField) -> Inventory:
    """
    List the K-points of a modular model.

    Args:
        model_id: One of X20, X27, X32, X36
        field: Q(i) or Q(sqrt(-3))

    Returns:
        Inventory with counts, cusps and the quoted-list comparison

    Raises:
        InvalidInputError: For an unknown model
        ClassificationViolation: If the count or the quoted list disagrees
    """
    model = MODELS.get(model_id)
    if model is None:
        raise InvalidInputError(f"Unknown model {model_id!r}; expected one of {sorted(MODELS)}")
    E = Curve(field, list(model.coeffs))
    points = tuple(sorted(torsion_points(E), key=point_key))
    expected = model.expected.get(field.name)
    cusps = ogg_cusps(model.level).rational_over(field)

    quoted = quoted_points(model_id, field)
    match = None
    if quoted is not None:
        match = set(quoted) == set(points)

    inventory = Inventory(
        model_id=model_id,
        field=field,
        curve=E,
        points=points,
        expected=expected,
        cusps=cusps,
        quoted_match=match,
    )
    evidence = inventory.to_dict()
    if expected is not None and inventory.count != expected:
        raise ClassificationViolation(f"{model_id} over {field!r} has {inventory.count} points, expected {expected}", evidence)
    if match is False:
        raise ClassificationViolation(f"{model_id} over {field!r} differs from the quoted point list", evidence)
    logger.debug(f"{model_id} over {field!r}: {inventory.count} points, {cusps} cusps")
    return inventory
