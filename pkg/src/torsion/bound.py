"""
Torsion Bounds from Reduction.

For a prime pi of good reduction that is unramified over an odd rational
prime, E(K)_tors injects into the reduced curve, so the gcd of a few
reduced orders bounds the torsion.
"""

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import List, Tuple

from ..ecurve.curve import Curve
from ..ecurve.finite_field import count_points
from ..ecurve.reduction import reduce_curve
from ..qfield.field import FieldElem
from ..qfield.rings import primes_by_norm, residue_characteristic, splitting_type
from ..utils.config import get_settings
from ..utils.errors import TorsionBoundError
from ..utils.logger import get_logger

logger = get_logger(__name__)

MIN_BOUND_PRIMES = 3


@dataclass(frozen=True)
class TorsionBound:
    """
    A multiplicative bound for |E(K)_tors|.

    Attributes:
        bound: gcd of the reduced orders
        counts: (prime, residue field size, |E~(F_q)|) per prime used
    """

    bound: int
    counts: Tuple[Tuple[FieldElem, int, int], ...]


def bound_primes(E: Curve) -> List[Tuple[FieldElem, int, int]]:
    """
    The primes used for the bound with their reduced point counts.

    The smallest good primes (by norm) that are unramified over an odd
    prime, up to the configured count and norm limit.
    """
    settings = get_settings()
    K = E.field
    used = []
    for pi in primes_by_norm(K, settings.bound_max_norm):
        ell = residue_characteristic(pi)
        if ell == 2 or splitting_type(ell, K) == "ramified":
            continue
        reduced = reduce_curve(E, pi)
        if not reduced.is_good:
            logger.debug(f"Skipping {pi}: {reduced.reduction_type} reduction")
            continue
        q = reduced.curve.field.q
        used.append((pi, q, count_points(reduced.curve)))
        if len(used) == settings.bound_prime_count:
            break
    return used


def torsion_bound_report(E: Curve) -> TorsionBound:
    """
    Compute the bound with the counts behind it.

    Raises:
        TorsionBoundError: If fewer than three usable primes exist below the norm limit
    """
    used = bound_primes(E)
    if len(used) < MIN_BOUND_PRIMES:
        raise TorsionBoundError(
            f"Only {len(used)} good odd primes of norm <= {get_settings().bound_max_norm} for {E}"
        )
    bound = reduce(gcd, (n for _, _, n in used))
    logger.debug(f"Torsion bound for {E}: {bound} from {[(str(p), n) for p, _, n in used]}")
    return TorsionBound(bound=bound, counts=tuple(used))


def torsion_bound(E: Curve) -> int:
    """An integer B with |E(K)_tors| dividing B."""
    return torsion_bound_report(E).bound
