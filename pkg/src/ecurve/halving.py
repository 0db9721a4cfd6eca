"""
Halving Points with Full 2-Torsion.

On y^2 = (x-e1)(x-e2)(x-e3) a point P is a double over a field k exactly
when every x(P) - e_i is a square in k, and the halves then have
x = x(P) + r1*r2 + r1*r3 + r2*r3 for square roots r_i of x(P) - e_i.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..qfield.radical import RadicalElem, Tower, sqrt_with_extension, tower_sqrt
from ..qfield.squares import sqrt_in_K, squarefree_part
from .curve import INFINITY, Curve, Point
from .twist_form import two_torsion_split


@dataclass(frozen=True)
class TwoTorsionFrame:
    """
    The two-division model of a curve with its 2-torsion roots.

    Attributes:
        model: y^2 = x^3 + a2*x^2 + a4*x + a6, isomorphic to the input curve
        roots: e1 (in K when the cubic has a K-root), e2, e3
        tower: K, or K(sqrt(s)) when the quadratic factor needs sqrt(s)
    """

    model: Curve
    roots: Tuple[RadicalElem, RadicalElem, RadicalElem]
    tower: Tower

    def roots_in(self, target: Tower) -> Tuple[RadicalElem, ...]:
        """The roots viewed in another tower containing them."""
        if not self.tower.radicands:
            return tuple(target.lift(r.base_value()) for r in self.roots)
        s = self.tower.radicands[0]
        if s in target.radicands:
            return tuple(target.embed(r) for r in self.roots)
        root_s = tower_sqrt(target.lift(s))
        if root_s is None:
            return tuple(target.embed(r) for r in self.roots)
        out = []
        for r in self.roots:
            a, b = r.coords
            out.append(target.lift(a) + root_s * b)
        return tuple(out)


def two_torsion_frame(E: Curve) -> Optional[TwoTorsionFrame]:
    """
    The 2-torsion frame of E, or None when the 2-division cubic is irreducible over K.

    With one K-root e1 the other roots are (-b +- sqrt(disc))/2 for the
    quadratic factor x^2 + b*x + c, living in K(sqrt(sf(disc))).
    """
    split = two_torsion_split(E)
    K = E.field
    model = E.two_division_model()
    if split.kind == "irreducible":
        return None
    if split.kind == "full":
        tower = Tower.build(K, ())
        roots = tuple(tower.lift(r) for r in split.roots)
        return TwoTorsionFrame(model=model, roots=roots, tower=tower)

    disc = split.discriminant()
    s = squarefree_part(disc)
    c = sqrt_in_K(disc / s)
    tower = Tower.build(K, (s,))
    root_disc = tower.radical(0) * c
    b = split.quadratic_factor().coeffs[1]
    e1 = tower.lift(split.roots[0])
    e2 = (root_disc - b) / 2
    e3 = (-root_disc - b) / 2
    return TwoTorsionFrame(model=model, roots=(e1, e2, e3), tower=tower)


@dataclass(frozen=True)
class Halving:
    """
    Halves of a point.

    Attributes:
        tower: Tower containing the halves
        x_candidates: The distinct Knapp x-coordinates
        halves: Points Q with [2]Q = P, verified by doubling
    """

    tower: Tower
    x_candidates: Tuple[RadicalElem, ...]
    halves: Tuple[Point, ...]


def knapp_halving(frame: TwoTorsionFrame, P: Point, tower: Optional[Tower] = None, extend: bool = False) -> Halving:
    """
    The points Q with [2]Q = P on the frame's model.

    Args:
        frame: Two-division model with its 2-torsion roots
        P: Point on frame.model with coordinates in tower
        tower: Tower holding P and the roots (defaults to the frame's)
        extend: Adjoin missing square roots of elements that are squares in F

    Returns:
        Halving; empty when some x(P) - e_i has no square root available

    Raises:
        TowerDepthError: If extending would exceed the depth cap
    """
    tower = tower or frame.tower
    E = frame.model
    roots = frame.roots_in(tower)
    if P.is_infinity:
        two_torsion = tuple(Point(e, tower.zero()) for e in roots)
        return Halving(tower, tuple(e for e in roots), (INFINITY,) + two_torsion)

    x0, y0 = tower.embed(P.x), tower.embed(P.y)
    diffs = [x0 - e for e in roots]
    square_roots: List[RadicalElem] = []
    for i, z in enumerate(diffs):
        if i == 2 and not y0.is_zero():
            # r1*r2*r3 = +-y0 fixes r3 once r1, r2 are known.
            square_roots.append(tower.embed(y0) / (square_roots[0] * square_roots[1]))
            continue
        if extend:
            found = sqrt_with_extension(tower, z)
            if found is None:
                return Halving(tower, (), ())
            tower, r = found
        else:
            r = tower_sqrt(tower.embed(z))
            if r is None:
                return Halving(tower, (), ())
        square_roots.append(r)

    r1, r2, r3 = (tower.embed(r) for r in square_roots)
    x0 = tower.embed(x0)
    xs: List[RadicalElem] = []
    for s2 in (1, -1):
        for s3 in (1, -1):
            x = x0 + r1 * r2 * s2 + r1 * r3 * s3 + r2 * r3 * (s2 * s3)
            if x not in xs:
                xs.append(x)
    halves = []
    for x in xs:
        for Q in E.points_with_x(x):
            if E.double(Q) == P:
                halves.append(Q)
    return Halving(tower, tuple(xs), tuple(halves))

