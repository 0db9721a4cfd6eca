"""
Cusps of X0(n).

Ogg's count: the cusps of X0(n) fall into classes indexed by the divisors
d of n, with phi(gcd(d, n/d)) cusps in class d, all conjugate over
Q(zeta_g) for g = gcd(d, n/d). The orbit count on P^1(Z/n) is an
independent check of the total.
"""

from dataclasses import dataclass
from math import gcd
from typing import Dict, Set, Tuple

from sympy import divisors, totient

from ..qfield.field import QField
from ..utils.errors import InvalidInputError

MAX_LEVEL = 10**4

# Cyclotomic conductors g with Q(zeta_g) inside K.
_CONDUCTORS_IN = {-1: (1, 2, 4), -3: (1, 2, 3, 6)}


@dataclass(frozen=True)
class CuspRow:
    """One divisor class: d, g = gcd(d, n/d) and phi(g) cusps defined over Q(zeta_g)."""

    d: int
    g: int
    count: int


@dataclass(frozen=True)
class CuspTable:
    """
    Ogg's cusp table of X0(n).

    Attributes:
        n: Level
        rows: One row per divisor of n, in increasing order
    """

    n: int
    rows: Tuple[CuspRow, ...]

    @property
    def total(self) -> int:
        return sum(row.count for row in self.rows)

    def rational_over(self, field: QField) -> int:
        """The number of cusps defined over K."""
        return sum(row.count for row in self.rows if row.g in _CONDUCTORS_IN[field.D])

    def as_pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((row.d, row.count) for row in self.rows)

    def to_dict(self) -> Dict:
        return {"n": self.n, "rows": [[row.d, row.count] for row in self.rows], "total": self.total}


def ogg_cusps(n: int) -> CuspTable:
    """
    Ogg's table for X0(n).

    Args:
        n: Level, 1 <= n <= 10^4

    Returns:
        CuspTable with total sum(phi(gcd(d, n/d)))
    """
    if not 1 <= n <= MAX_LEVEL:
        raise InvalidInputError(f"Level {n} outside 1..{MAX_LEVEL}")
    rows = []
    for d in divisors(n):
        g = gcd(d, n // d)
        rows.append(CuspRow(d=int(d), g=g, count=int(totient(g))))
    return CuspTable(n=n, rows=tuple(rows))


def _projective_points(n: int) -> Set[Tuple[int, int]]:
    units = [u for u in range(1, n + 1) if gcd(u, n) == 1]
    points = set()
    for c in range(n):
        for d in range(n):
            if gcd(gcd(c, d), n) != 1:
                continue
            points.add(min(((u * c) % n, (u * d) % n) for u in units))
    return points


def cusp_orbits_bruteforce(n: int) -> int:
    """
    Count the orbits of (c : d) -> (c : c + d) on P^1(Z/n).

    P^1(Z/n) is Gamma0(n)\\SL2(Z) through the bottom row, and the
    translation generates the stabilizer of infinity, so the orbits are
    the cusps.
    """
    if n < 1:
        raise InvalidInputError(f"Level {n} must be positive")
    if n == 1:
        return 1
    units = [u for u in range(1, n + 1) if gcd(u, n) == 1]

    def canon(c: int, d: int) -> Tuple[int, int]:
        return min(((u * c) % n, (u * d) % n) for u in units)

    unseen = _projective_points(n)
    orbits = 0
    while unseen:
        start = unseen.pop()
        orbits += 1
        c, d = start
        nxt = canon(c, c + d)
        while nxt != start:
            unseen.discard(nxt)
            nxt = canon(nxt[0], nxt[0] + nxt[1])
    return orbits
