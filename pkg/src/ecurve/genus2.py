"""
Genus-2 Point Counts.

Curves z^2 = scale * h(u) with h of degree 6 over a finite field. Affine
counts are vectorized over the field; Jacobian orders come from the zeta
function, reconstructed from the counts over F_q and F_{q^2}.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np
from sympy import GF, Poly, Symbol, factorint

from ..utils.errors import FieldSizeError, InvalidInputError, SingularCurveError
from ..utils.logger import get_logger
from .finite_field import FFElem, FiniteField, get_field

logger = get_logger(__name__)

MAX_AFFINE_FIELD = 10**4
MAX_JACOBIAN_FIELD = 10**6

# u^6 + u^5 - 6u^4 - 3u^3 + 14u^2 - 7u + 1, constant term first.
ORDER7_DESCENT_SEXTIC: Tuple[int, ...] = (1, -7, 14, -3, -6, 1, 1)

_U = Symbol("u")


@dataclass(frozen=True)
class ZetaData:
    """
    Zeta data of a genus-2 curve over F_q.

    Attributes:
        q: Field size
        n1: Points over F_q (smooth projective model)
        n2: Points over F_{q^2}
        c1: First L-polynomial coefficient, n1 - q - 1
        c2: Second L-polynomial coefficient
        l_polynomial: (1, c1, c2, q*c1, q^2)
        jacobian_order: L(1)
    """

    q: int
    n1: int
    n2: int
    c1: int
    c2: int
    l_polynomial: Tuple[int, int, int, int, int]
    jacobian_order: int


def _prime_power(q: int) -> Tuple[int, int]:
    factors = factorint(q)
    if len(factors) != 1:
        raise InvalidInputError(f"{q} is not a prime power")
    (p, k), = factors.items()
    return int(p), int(k)


def _scale_in(F: FiniteField, scale: Union[int, FFElem]) -> FFElem:
    if isinstance(scale, FFElem):
        if scale.field.p != F.p or scale.idx >= F.p:
            raise InvalidInputError("The scale must lie in the prime field")
        return F(scale.idx)
    return F(int(scale))


def _values(F: FiniteField, h: Sequence[int], scale: FFElem) -> np.ndarray:
    """scale * h(u) for every u in F, as encodings."""
    us = np.arange(F.q, dtype=np.int64)
    acc = np.full(F.q, F(h[-1]).idx, dtype=np.int64)
    for c in reversed(h[:-1]):
        acc = F.add_idx(F.mul_idx(acc, us), F(c).idx)
    return F.mul_idx(acc, scale.idx)


def _affine_count(F: FiniteField, h: Sequence[int], scale: FFElem) -> int:
    chi = F.chi_idx(_values(F, h, scale))
    return F.q + int(chi.sum())


def genus2_affine_count(h: Sequence[int], scale: Union[int, FFElem], q: int) -> int:
    """
    Affine solutions of z^2 = scale * h(u) over F_q.

    Args:
        h: Integer coefficients of h, constant term first
        scale: Element of the prime field
        q: Field size, at most 10^4

    Returns:
        The number of pairs (u, z); q when scale is 0
    """
    if q > MAX_AFFINE_FIELD:
        raise FieldSizeError(f"Affine genus-2 count over F_{q} exceeds {MAX_AFFINE_FIELD}")
    p, k = _prime_power(q)
    F = get_field(p, k)
    s = _scale_in(F, scale)
    if s.is_zero():
        logger.warning("Degenerate scale 0: every u gives the single solution z = 0")
        return F.q
    return _affine_count(F, h, s)


def _check_smooth(h: Sequence[int], scale: FFElem):
    p = scale.field.p
    poly = Poly([int(c) * scale.idx for c in reversed(h)], _U, domain=GF(p))
    if scale.is_zero() or poly.degree() != 6:
        raise SingularCurveError(f"scale*h does not have degree 6 modulo {p}")
    if poly.gcd(poly.diff(_U)).degree() > 0:
        raise SingularCurveError(f"scale*h has a repeated root modulo {p}")


def genus2_jacobian_order(h: Sequence[int], scale: Union[int, FFElem], q: int) -> ZetaData:
    """
    The order of the Jacobian of z^2 = scale * h(u) over the prime field F_q.

    Points at infinity on the smooth model: two over a field where the
    leading coefficient of scale * h is a square, none otherwise. Over
    F_{q^2} every element of F_q is a square, so there are always two.

    Args:
        h: Integer coefficients of a degree-6 h, constant term first
        scale: Nonzero element of F_q
        q: A prime with q^2 <= 10^6

    Returns:
        ZetaData with the L-polynomial and its value at 1

    Raises:
        SingularCurveError: If scale * h is not squarefree of degree 6 mod q
    """
    if q * q > MAX_JACOBIAN_FIELD:
        raise FieldSizeError(f"Jacobian order over F_{q} needs F_{q * q}, beyond {MAX_JACOBIAN_FIELD}")
    p, k = _prime_power(q)
    if k != 1:
        raise InvalidInputError("Jacobian orders are computed over prime fields only")
    if len(h) != 7:
        raise InvalidInputError(f"Expected a sextic, got {len(h)} coefficients")
    F1 = get_field(p, 1)
    s1 = _scale_in(F1, scale)
    _check_smooth(h, s1)

    lead = F1(h[-1]) * s1
    n1 = _affine_count(F1, h, s1) + (2 if lead.is_square() else 0)
    F2 = get_field(p, 2)
    n2 = _affine_count(F2, h, F2(s1.idx)) + 2

    c1 = n1 - q - 1
    twice_c2 = n2 - q * q - 1 + c1 * c1
    if twice_c2 % 2:
        raise SingularCurveError(f"Inconsistent counts N1={n1}, N2={n2} over F_{q}")
    c2 = twice_c2 // 2
    l_poly = (1, c1, c2, q * c1, q * q)
    order = sum(l_poly)
    logger.debug(f"Genus-2 zeta over F_{q}: N1={n1}, N2={n2}, L={l_poly}, #J={order}")
    return ZetaData(q=q, n1=n1, n2=n2, c1=c1, c2=c2, l_polynomial=l_poly, jacobian_order=order)
