"""
Division Polynomials.

Univariate division polynomials of a long Weierstrass model: psi_n itself
for odd n and psi_n / psi_2 for even n, after substituting psi_2^2 = F(x)
with F = 4x^3 + b2*x^2 + 2*b4*x + b6.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from ..utils.errors import InvalidInputError
from .curve import Curve
from .polynomial import KPoly

MAX_DIVISION_INDEX = 32


@dataclass(frozen=True)
class DivisionPoly:
    """
    The univariate division polynomial of index n.

    Attributes:
        n: Index
        poly: psi_n (n odd) or psi_n / psi_2 (n even) in x
    """

    n: int
    poly: KPoly

    @property
    def degree(self) -> int:
        return self.poly.degree

    def monic(self) -> KPoly:
        return self.poly.monic()


def _two_torsion_F(E: Curve) -> KPoly:
    return KPoly(E.field, (E.b6, 2 * E.b4, E.b2, 4))


def _reduced_table(E: Curve, n: int) -> Dict[int, KPoly]:
    """psi~_k for 0 <= k <= n+1 (enough for the multiplication maps)."""
    K = E.field
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    F = _two_torsion_F(E)
    F2 = F * F
    table: Dict[int, KPoly] = {
        0: KPoly(K, ()),
        1: KPoly(K, (K.one,)),
        2: KPoly(K, (K.one,)),
        3: KPoly(K, (b8, 3 * b6, 3 * b4, b2, 3)),
        4: KPoly(K, (
            b4 * b8 - b6 * b6,
            b2 * b8 - b4 * b6,
            10 * b8,
            10 * b6,
            5 * b4,
            b2,
            2,
        )),
    }
    for k in range(5, n + 2):
        m = k // 2
        if k % 2:
            if m % 2 == 0:
                table[k] = F2 * table[m + 2] * table[m] ** 3 - table[m - 1] * table[m + 1] ** 3
            else:
                table[k] = table[m + 2] * table[m] ** 3 - F2 * table[m - 1] * table[m + 1] ** 3
        else:
            table[k] = table[m] * (
                table[m + 2] * table[m - 1] ** 2 - table[m - 2] * table[m + 1] ** 2
            )
    return table


def division_polynomial(E: Curve, n: int) -> DivisionPoly:
    """
    The n-th division polynomial of E in univariate form.

    Args:
        E: Curve over K
        n: Index, 1 <= n <= 32

    Returns:
        DivisionPoly whose roots are the x-coordinates of the nonzero points
        of E[n] (outside E[2] when n is even)

    Raises:
        InvalidInputError: If n is out of range
    """
    if not 1 <= n <= MAX_DIVISION_INDEX:
        raise InvalidInputError(f"Division polynomial index {n} outside 1..{MAX_DIVISION_INDEX}")
    return DivisionPoly(n, _reduced_table(E, n)[n])


def multiplication_x_map(E: Curve, n: int) -> Tuple[KPoly, KPoly]:
    """
    Numerator and denominator of x([n]P) as polynomials in x(P).

    Args:
        E: Curve over K
        n: Multiplier, 1 <= n <= 31

    Returns:
        (phi, den) with x([n]P) = phi(x) / den(x)
    """
    if not 1 <= n < MAX_DIVISION_INDEX:
        raise InvalidInputError(f"Multiplier {n} outside 1..{MAX_DIVISION_INDEX - 1}")
    table = _reduced_table(E, n)
    x = KPoly.x(E.field)
    F = _two_torsion_F(E)
    psi_sq = table[n] * table[n]
    if n % 2:
        return x * psi_sq - F * table[n - 1] * table[n + 1], psi_sq
    return x * F * psi_sq - table[n - 1] * table[n + 1], F * psi_sq


def division_points_poly(E: Curve, n: int, x0) -> KPoly:
    """
    The polynomial whose roots are x(Q) for Q with [n]Q = +-P, x(P) = x0.

    Args:
        E: Curve over K
        n: Multiplier
        x0: x-coordinate of P (in K)
    """
    phi, den = multiplication_x_map(E, n)
    return phi - den * x0
