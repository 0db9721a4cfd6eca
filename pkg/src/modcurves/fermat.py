"""
The Fermat Quartic x^4 + y^4 = 1.

Over K(sqrt(-7)) with K = Q(i) the solutions are the eight with xy = 0 and
the 32 points (e1*(1 + e3*w)/2, e2*(1 - e3*w)/2), w = sqrt(-7). The search
routine looks for solutions over other small towers.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Set, Tuple

from ..qfield.field import GAUSS, FieldElem, QField
from ..qfield.radical import RadicalElem, Tower, tower_sqrt
from ..qfield.squares import squarefree_part
from ..utils.config import get_settings
from ..utils.errors import InvalidInputError, TowerDepthError, VerificationMismatch
from ..utils.logger import get_logger

logger = get_logger(__name__)

MAX_SEARCH_DEPTH = 2
DEFAULT_COEFF_BOUND = 2


def _rational_height(q: Fraction) -> int:
    return max(abs(q.numerator), q.denominator)


def height(z: RadicalElem) -> int:
    """The largest numerator or denominator among the rational coordinates of z."""
    return max(max(_rational_height(c.a), _rational_height(c.b)) for c in z.coords)


@dataclass(frozen=True)
class FermatSolution:
    """
    A point of x^4 + y^4 = 1 in a radical tower, checked on construction.

    Raises:
        VerificationMismatch: If the equation does not hold exactly
    """

    x: RadicalElem
    y: RadicalElem

    def __post_init__(self):
        if self.x ** 4 + self.y ** 4 != 1:
            raise VerificationMismatch("x^4 + y^4", 1, str(self.x ** 4 + self.y ** 4))

    @property
    def trivial(self) -> bool:
        return self.x.is_zero() or self.y.is_zero()

    @cached_property
    def height(self) -> int:
        return max(height(self.x), height(self.y))

    def key(self) -> Tuple:
        return (
            tuple(c.key() for c in self.x.coords),
            tuple(c.key() for c in self.y.coords),
        )

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def fermat_quartic_solutions() -> List[FermatSolution]:
    """
    The 40 solutions over Q(i, sqrt(-7)), each verified.

    Returns:
        The 8 trivial solutions followed by the 32 others
    """
    K = GAUSS
    L = Tower.build(K, [squarefree_part(K(-7))])
    w = tower_sqrt(L.lift(-7))
    units = [L.lift(u) for u in (K(1), K(-1), K(0, 1), K(0, -1))]
    zero = L.zero()

    solutions = [FermatSolution(u, zero) for u in units] + [FermatSolution(zero, u) for u in units]
    for e1 in units:
        for e2 in units:
            for e3 in (1, -1):
                x = e1 * (w * e3 + 1) / 2
                y = e2 * (-(w * e3) + 1) / 2
                solutions.append(FermatSolution(x, y))
    logger.debug(f"Verified {len(solutions)} solutions over {L}")
    return solutions


def _ring_grid(K: QField, bound: int) -> List[FieldElem]:
    out = []
    for u in range(-bound, bound + 1):
        for v in range(-bound, bound + 1):
            if K.D == -1:
                out.append(K(u, v))
            else:
                out.append(K(Fraction(2 * u - v, 2), Fraction(v, 2)))
    return out


def _fourth_roots(z: RadicalElem) -> List[RadicalElem]:
    """Every y in z's tower with y^4 = z."""
    if z.is_zero():
        return [z]
    roots = []
    r = tower_sqrt(z)
    if r is None:
        return roots
    for square in (r, -r):
        y = tower_sqrt(square)
        if y is not None:
            roots.extend([y, -y])
    return roots


def search_grid(L: Tower, height_bound: int, coeff_bound: int = DEFAULT_COEFF_BOUND) -> Set[RadicalElem]:
    """
    The x-coordinates tried by the search.

    Elements (a + b*sqrt(m))/c with m running over products of the radicands,
    a and b in O_K with coordinates at most coeff_bound, and 1 <= c <= height_bound.
    """
    ring = _ring_grid(L.field, coeff_bound)
    grid: Set[RadicalElem] = set()
    for c in range(1, height_bound + 1):
        for a in ring:
            grid.add(L.lift(a / c))
        for mask in range(1, L.size):
            coords_b = [L.field.zero] * L.size
            coords_b[mask] = L.field.one
            radical = RadicalElem(L, tuple(coords_b))
            for a in ring:
                for b in ring:
                    if b.is_zero():
                        continue
                    grid.add((radical * b + a) / c)
    return grid


def fermat_quartic_search(
    field: QField,
    radicands: Sequence = (),
    height_bound: Optional[int] = None,
    coeff_bound: int = DEFAULT_COEFF_BOUND,
) -> List[FermatSolution]:
    """
    Solutions of x^4 + y^4 = 1 over K(sqrt(d) : d in radicands) within the grid.

    Only x of the form (a + b*sqrt(m))/c from search_grid are tried, so a
    solution of height at most height_bound outside the grid is missed.
    An empty result is not a proof that no such point exists.

    Args:
        field: K
        radicands: At most two radicands
        height_bound: Height limit for both coordinates (at most the configured maximum)
        coeff_bound: Coordinate bound for the ring elements in the grid

    Returns:
        Solutions sorted by coordinates

    Raises:
        TowerDepthError: If more than two radicands are given
        InvalidInputError: If the height bound is out of range
    """
    limit = get_settings().fermat_max_height
    H = height_bound if height_bound is not None else limit
    if H < 1 or H > limit:
        raise InvalidInputError(f"Height bound {H} outside 1..{limit}")
    if len(radicands) > MAX_SEARCH_DEPTH:
        raise TowerDepthError(f"The search adjoins at most {MAX_SEARCH_DEPTH} square roots")
    L = Tower.build(field, [squarefree_part(field.coerce(d)) for d in radicands])

    found = {}
    grid = search_grid(L, H, coeff_bound)
    logger.debug(f"Searching {len(grid)} x-coordinates over {L} up to height {H}")
    for x in grid:
        if height(x) > H:
            continue
        for y in _fourth_roots(1 - x ** 4):
            if height(y) > H:
                continue
            solution = FermatSolution(x, y)
            found[solution.key()] = solution
    return [found[k] for k in sorted(found)]
