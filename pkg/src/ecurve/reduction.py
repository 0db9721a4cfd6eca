"""
Reduction modulo primes of O_K.

A ResidueMap sends the pi-integral elements of K onto the residue field
F_q of a prime pi (q = l or l^2). reduce_curve minimalizes a model at pi
by scaling and returns the reduced curve together with its reduction type.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from ..qfield.field import FieldElem
from ..qfield.rings import is_integral, residue_characteristic, splitting_type, valuation
from ..utils.errors import ReductionError, SingularCurveError
from ..utils.logger import get_logger
from .curve import Curve
from .finite_field import FFCurve, FFElem, FiniteField, get_field

logger = get_logger(__name__)

GOOD = "good"
MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"


class ResidueMap:
    """
    The reduction homomorphism O_K,(pi) -> O_K/(pi).

    Args:
        pi: A prime element of O_K of odd residue characteristic

    Raises:
        ReductionError: If pi lies over 2 or is not a prime element
    """

    def __init__(self, pi: FieldElem):
        if not is_integral(pi) or pi.norm() <= 1:
            raise ReductionError(f"{pi} is not a prime element")
        self.pi = pi
        self.K = pi.field
        self.ell = residue_characteristic(pi)
        if self.ell == 2:
            raise ReductionError("Residue characteristic 2 is not supported")
        self.kind = splitting_type(self.ell, self.K)
        norm = int(pi.norm())
        expected = self.ell ** 2 if self.kind == "inert" else self.ell
        if norm != expected:
            raise ReductionError(f"{pi} has norm {norm}, not that of a prime above {self.ell}")

    @cached_property
    def field(self) -> FiniteField:
        return get_field(self.ell, 2 if self.kind == "inert" else 1)

    @cached_property
    def s_image(self) -> FFElem:
        """The residue of the generator s = sqrt(D)."""
        F = self.field
        if self.kind == "ramified":
            return F.zero
        if self.kind == "split":
            # pi = A + B*s vanishes, so s = -A/B.
            return F(self._mod(-self.pi.a / self.pi.b))
        root = F(self.K.D).sqrt()
        other = -root
        return root if root.idx < other.idx else other

    def _mod(self, q: Fraction) -> int:
        if q.denominator % self.ell == 0:
            raise ReductionError(f"{q} is not integral at {self.pi}")
        return q.numerator * pow(q.denominator, -1, self.ell) % self.ell

    def _image_integral(self, y: FieldElem) -> FFElem:
        F = self.field
        return F(self._mod(y.a)) + F(self._mod(y.b)) * self.s_image

    def image(self, x) -> FFElem:
        """
        The residue of x.

        Raises:
            ReductionError: If x is not integral at pi
        """
        x = self.K.coerce(x)
        if x.is_zero():
            return self.field.zero
        if valuation(x, self.pi) < 0:
            raise ReductionError(f"{x} is not integral at {self.pi}")
        n = x.denominator()
        v = valuation(self.K(n), self.pi)
        scale = self.pi ** v
        return self._image_integral(x * n / scale) / self._image_integral(self.K(n) / scale)

    def __repr__(self) -> str:
        return f"ResidueMap({self.pi} -> {self.field!r})"


@dataclass(frozen=True)
class ReducedCurve:
    """
    Result of reducing a curve at a prime.

    Attributes:
        model: The pi-minimalized model over K that was reduced
        reduction_type: 'good', 'multiplicative' or 'additive'
        curve: The reduced curve (None unless the reduction is good)
        residue: The residue map used
    """

    model: Curve
    reduction_type: str
    curve: Optional[FFCurve]
    residue: ResidueMap

    @property
    def is_good(self) -> bool:
        return self.reduction_type == GOOD


def _v(x: FieldElem, pi: FieldElem) -> float:
    return float("inf") if x.is_zero() else valuation(x, pi)


def _scale(E: Curve, u: FieldElem) -> Curve:
    """The model with a_i replaced by a_i * u^i."""
    weights = (1, 2, 3, 4, 6)
    return Curve(E.field, [c * u ** w for c, w in zip(E.coeffs, weights)])


def minimal_model_at(E: Curve, pi: FieldElem) -> Curve:
    """
    A model of E integral at pi with v(Delta) reduced by scaling alone.

    For residue characteristic at least 5 the short model (-27c4, -54c6) is
    used and divided by pi^(4,6) while possible; this is minimal. For 3 the
    long model is scaled, which suffices for the curves handled here but is
    not a full Tate algorithm.
    """
    ell = residue_characteristic(pi)
    weights = (1, 2, 3, 4, 6)
    model = E.short_model() if ell >= 5 else E

    k = 0
    for c, w in zip(model.coeffs, weights):
        if not c.is_zero():
            v = valuation(c, pi)
            if v < 0:
                k = max(k, -(v // w))
    if k:
        model = _scale(model, pi ** k)

    inv = pi.inverse()
    while _v(model.discriminant, pi) >= 12 and all(
        _v(c, pi) >= w for c, w in zip(model.coeffs, weights)
    ):
        model = _scale(model, inv)
    return model


def reduce_curve(E: Curve, pi: FieldElem) -> ReducedCurve:
    """
    Reduce E modulo the prime pi.

    Args:
        E: Curve over K
        pi: Prime element of odd residue characteristic

    Returns:
        ReducedCurve with the type read off the minimalized model: good iff
        v(Delta) = 0, multiplicative iff v(Delta) > 0 and v(c4) = 0, else
        additive

    Raises:
        ReductionError: For residue characteristic 2
    """
    residue = ResidueMap(pi)
    model = minimal_model_at(E, pi)
    if valuation(model.discriminant, pi) == 0:
        kind = GOOD
    elif _v(model.c4, pi) == 0:
        kind = MULTIPLICATIVE
    else:
        kind = ADDITIVE

    reduced = None
    if kind == GOOD:
        try:
            reduced = FFCurve(residue.field, [residue.image(c) for c in model.coeffs])
        except SingularCurveError:
            raise ReductionError(f"Reduction of {model} at {pi} is singular despite a unit discriminant")
    logger.debug(f"{E} at {pi}: {kind} reduction")
    return ReducedCurve(model=model, reduction_type=kind, curve=reduced, residue=residue)
