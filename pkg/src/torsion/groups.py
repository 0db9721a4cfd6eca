"""
Torsion Group Structures.

Finite abelian groups with at most two invariant factors, and the published
lists they are checked against: Mazur's groups, Najman's lists over Q(i)
and Q(sqrt(-3)), and the possible torsion groups over F.
"""

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Dict, List, Optional, Tuple

from ..qfield.field import QField
from ..utils.errors import InvalidInputError


@dataclass(frozen=True, order=True)
class TorsionGroup:
    """
    Z/m + Z/n with m | n (m = 1 for a cyclic group).

    Attributes:
        m: Smaller invariant factor
        n: Larger invariant factor
        generators: Optional explicit generators (excluded from equality)
    """

    m: int
    n: int
    generators: Tuple[Any, ...] = field(default=(), compare=False, hash=False)

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.n % self.m:
            raise InvalidInputError(f"Invalid invariant factors ({self.m}, {self.n})")

    @classmethod
    def of(cls, a: int, b: int = 1) -> "TorsionGroup":
        """Z/a + Z/b for any a, b >= 1, in invariant-factor form."""
        g = gcd(a, b)
        return cls(g, a * b // g)

    @classmethod
    def parse(cls, text: str) -> "TorsionGroup":
        """
        Parse '8', '2x8', '2+8' or '(2,8)'.

        Raises:
            InvalidInputError: On malformed text or invalid factors
        """
        match = re.fullmatch(r"\s*\(?\s*(\d+)\s*(?:[x,+⊕]\s*(\d+))?\s*\)?\s*", text)
        if not match:
            raise InvalidInputError(f"Cannot parse torsion group {text!r}")
        a = int(match.group(1))
        if match.group(2) is None:
            return cls(1, a)
        return cls(a, int(match.group(2)))

    @property
    def order(self) -> int:
        return self.m * self.n

    @property
    def is_cyclic(self) -> bool:
        return self.m == 1

    def two_part(self) -> "TorsionGroup":
        return TorsionGroup(_p_part(self.m, 2), _p_part(self.n, 2))

    def odd_part(self) -> "TorsionGroup":
        return TorsionGroup(_prime_to(self.m, 2), _prime_to(self.n, 2))

    def contains(self, other: "TorsionGroup") -> bool:
        """True when other embeds in this group."""
        return self.m % other.m == 0 and self.n % other.n == 0

    def direct_sum(self, other: "TorsionGroup") -> "TorsionGroup":
        """
        The invariant-factor form of self + other.

        Raises:
            InvalidInputError: If the sum needs more than two invariant factors
        """
        factors = sorted(_prime_power_factors(self) + _prime_power_factors(other))
        by_prime: Dict[int, List[int]] = {}
        for p, e in factors:
            by_prime.setdefault(p, []).append(p ** e)
        m, n = 1, 1
        for p, powers in by_prime.items():
            powers.sort()
            if len(powers) > 2:
                raise InvalidInputError(f"{self.format()} + {other.format()} has more than two invariant factors")
            n *= powers[-1]
            if len(powers) == 2:
                m *= powers[0]
        return TorsionGroup(m, n)

    def format(self) -> str:
        return str(self.n) if self.m == 1 else f"{self.m}x{self.n}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "generators": [_format_point(g) for g in self.generators],
        }

    def __str__(self) -> str:
        return self.format()


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def _prime_to(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def _prime_power_factors(G: TorsionGroup) -> List[Tuple[int, int]]:
    out = []
    for k in (G.m, G.n):
        p = 2
        while k > 1:
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            if e:
                out.append((p, e))
            p += 1
    return out


def _format_point(P) -> List[str]:
    if getattr(P, "is_infinity", False):
        return ["O"]
    return [str(P.x), str(P.y)]


def _groups(*pairs: Tuple[int, int]) -> Tuple[TorsionGroup, ...]:
    return tuple(TorsionGroup(m, n) for m, n in pairs)


MAZUR_GROUPS = _groups(
    *[(1, n) for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)],
    *[(2, 2 * n) for n in (1, 2, 3, 4)],
)

_NAJMAN_EXTRA = {
    -1: _groups((4, 4)),
    -3: _groups((3, 3), (3, 6)),
}

_MAIN_COMMON = _groups(
    (2, 4), (2, 6), (2, 8), (2, 10), (2, 12), (2, 16),
    (4, 8), (4, 12), (4, 16),
    (2, 2), (3, 3), (4, 4), (6, 6), (8, 8),
    (1, 1), (1, 3), (1, 5), (1, 7), (1, 9), (1, 15),
)

_MAIN_EXTRA = {
    -1: (),
    -3: _groups((2, 32)),
}

# Subgroups that never occur in E(F): Z/4+Z/4+Z/5, Z/12+Z/12, Z/4+Z/32, Z/4+Z/8+Z/3.
FORBIDDEN_SUBGROUPS = _groups((4, 20), (12, 12), (4, 32), (4, 24))


def najman_list(field: QField) -> Tuple[TorsionGroup, ...]:
    """The possible groups E(K)_tors over K = Q(i) or Q(sqrt(-3))."""
    return MAZUR_GROUPS + _NAJMAN_EXTRA[field.D]


def theorem_main_list(field: QField) -> Tuple[TorsionGroup, ...]:
    """The possible groups E(F)_tors over the maximal elementary abelian 2-extension of K."""
    return _MAIN_COMMON + _MAIN_EXTRA[field.D]


def is_subgroup(H: TorsionGroup, G: TorsionGroup) -> bool:
    """True when H embeds in G."""
    return G.contains(H)


def forbidden_subgroup(G: TorsionGroup) -> Optional[TorsionGroup]:
    """The first forbidden subgroup contained in G, if any."""
    for H in FORBIDDEN_SUBGROUPS:
        if G.contains(H):
            return H
    return None
