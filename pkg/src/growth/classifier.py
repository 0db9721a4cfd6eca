"""
Torsion Growth Classifier.

Computes E(F)_tors for a curve over K = Q(i) or Q(sqrt(-3)) and records
every rule it applies. The dispatch follows the shape of the 2-division
cubic: irreducible (no 2-torsion over F), full (the structure of E(K)_tors
fixes the answer, possibly after moving to a twist), or a single root (the
halving-height engine).
"""

from typing import List, Optional, Sequence, Tuple

from ..ecurve.curve import Curve
from ..ecurve.twist_form import two_torsion_split, twist_form_of
from ..qfield.field import FieldElem
from ..qfield.squares import squarefree_part
from ..torsion.groups import TorsionGroup, forbidden_subgroup, theorem_main_list
from ..torsion.torsion_k import torsion_K
from ..utils.errors import ClassificationViolation
from ..utils.logger import get_logger
from .halving import TwoPowerGrowth, two_power_growth
from .odd_part import OddGrowth, odd_growth, psi_roots
from .ono import exists_twist_order4, ono_order4, ono_order8
from .rules import GrowthCertificate, GrowthResult

logger = get_logger(__name__)

_G = TorsionGroup


def _evidence(E: Curve, **extra) -> dict:
    return {"curve": str(E), "field": E.field.name, **{k: str(v) for k, v in extra.items()}}


def _odd_step(cert: GrowthCertificate, odd: OddGrowth):
    cert.add(
        "ODD",
        f"odd part of E(F) is {odd.group}",
        psi_3=[str(x) for x in odd.roots.get(3, ())],
        psi_5=[str(x) for x in odd.roots.get(5, ())],
        psi_7=[str(x) for x in odd.roots.get(7, ())],
        psi_9_over_psi_3=[str(x) for x in odd.nine_roots],
    )


def _check_group(E: Curve, T: TorsionGroup, G: TorsionGroup):
    bad = forbidden_subgroup(G)
    if bad is not None:
        raise ClassificationViolation(
            f"{G} contains the forbidden subgroup {bad}", _evidence(E, torsion_K=T, group=G, forbidden=bad)
        )
    if G not in theorem_main_list(E.field):
        raise ClassificationViolation(f"{G} is not a possible E(F)_tors over {E.field!r}", _evidence(E, group=G))
    if not G.contains(T):
        raise ClassificationViolation(f"E(K)_tors = {T} does not embed in {G}", _evidence(E, torsion_K=T, group=G))


def _finish(
    E: Curve,
    T: TorsionGroup,
    cert: GrowthCertificate,
    exact: Optional[TorsionGroup] = None,
    candidates: Sequence[TorsionGroup] = (),
    radicands: Tuple[FieldElem, ...] = (),
) -> GrowthResult:
    groups = [exact] if exact is not None else list(candidates)
    for G in groups:
        _check_group(E, T, G)
    listed = ", ".join(G.format() for G in groups)
    cert.add("R8", "no forbidden subgroup", groups=listed)
    cert.add("MAIN", f"E(F)_tors in {{{listed}}}", field=repr(E.field))
    logger.debug(f"E(F)_tors of {E}: {listed}")
    return GrowthResult(
        torsion_K=T,
        exact=exact,
        candidates=tuple(sorted(set(candidates))) if exact is None else (),
        certificate=cert,
        witness_radicands=tuple(radicands),
    )


def _full_two_torsion(E: Curve, T: TorsionGroup, cert: GrowthCertificate, twisted: bool = False) -> Tuple[TorsionGroup, Tuple[FieldElem, ...]]:
    """E(F)_tors for E with full 2-torsion over K, and the twist radicands used."""
    K = E.field
    if T == _G(2, 8):
        refined = "4x16, 4x32" + (", 4x64" if K.D == -3 else "")
        cert.add("R2", "E(F) = 4x16", torsion_K=T, before_refinement=refined, excluded="4x32")
        return _G(4, 16), ()
    if T == _G(2, 6):
        cert.add("R3", "E(F) = 4x12", torsion_K=T)
        return _G(4, 12), ()
    if T == _G(4, 4):
        if K.D != -1:
            raise ClassificationViolation("E(K) = 4x4 outside Q(i)", _evidence(E, torsion_K=T))
        cert.add("R4", "E(F) = 8x8", torsion_K=T)
        return _G(8, 8), ()
    if T == _G(2, 4):
        if K.D == -1:
            cert.add("R5", "E(F) = 4x8", torsion_K=T)
            return _G(4, 8), ()
        twist = twist_form_of(E).twist(K(-1))
        verdict = ono_order4(twist)
        if verdict:
            cert.add("R7.order4", "E^(-1)(K) has a point of order 4", form=verdict.witness[0], point=verdict.witness[1])
            cert.add("R5", "E(F) = 8x8", torsion_K=T)
            return _G(8, 8), ()
        cert.add("R7.order4", "E^(-1)(K) has no point of order 4", form=twist)
        cert.add("R5", "E(F) = 4x8", torsion_K=T)
        return _G(4, 8), ()
    if T != _G(2, 2) or twisted:
        raise ClassificationViolation(f"Unexpected E(K)_tors {T} with full 2-torsion", _evidence(E, torsion_K=T))

    form = twist_form_of(E)
    enlarged = exists_twist_order4(form)
    if enlarged:
        d = enlarged.witness
        E_d = E.quadratic_twist(d)
        T_d = torsion_K(E_d)
        order8 = ono_order8(form.twist(d))
        cert.add("R6a", f"E^({d})(K) = {T_d}", form=form, d=d, order8=order8.holds)
        group, _ = _full_two_torsion(E_d, T_d, cert, twisted=True)
        cert.add("R6", f"E(F) = E^({d})(F) = {group}", d=d)
        return group, (d,)

    roots = psi_roots(E.two_division_model(), 3)
    if roots:
        x0 = roots[0]
        d = squarefree_part(E.two_division_cubic()(x0))
        E_d = E.quadratic_twist(d)
        T_d = torsion_K(E_d)
        cert.add("R6b", f"E^({d})(K) = {T_d}", x0=x0, d=d)
        group, _ = _full_two_torsion(E_d, T_d, cert, twisted=True)
        cert.add("R6", f"E(F) = E^({d})(F) = {group}", d=d)
        return group, (d,)

    odd = odd_growth(E)
    _odd_step(cert, odd)
    group = _G(4, 4).direct_sum(odd.group)
    cert.add("R6c", f"E(F) = {group}", form=form)
    return group, ()


def _cyclic_caps(E: Curve, two: TorsionGroup) -> bool:
    if E.field.D == -1:
        return two.m <= 2
    return two.m <= 4


def _cyclic_candidates(E: Curve, T: TorsionGroup, growth: TwoPowerGrowth, odd: TorsionGroup) -> List[TorsionGroup]:
    found = growth.group
    out = []
    for H in theorem_main_list(E.field):
        two = H.two_part()
        if two == found or not two.contains(found):
            continue
        if H.odd_part() != odd or not _cyclic_caps(E, two):
            continue
        if forbidden_subgroup(H) is not None or not H.contains(T):
            continue
        out.append(H)
    return out


def _one_root(E: Curve, T: TorsionGroup, cert: GrowthCertificate) -> GrowthResult:
    growth = two_power_growth(E)
    for rule in growth.rules_cited():
        asked = [d for d in growth.decisions if d.rule == rule]
        yes = sum(1 for d in asked if d.holds)
        cert.add(rule, f"{yes} of {len(asked)} elements are squares in F", questions=len(asked))
    cert.add(
        "R7",
        f"2-part of E(F) is {'' if growth.exact else 'at least '}{growth.group}",
        orders=growth.orders,
        radicands=[str(d) for d in growth.radicands],
    )
    if not _cyclic_caps(E, growth.group):
        raise ClassificationViolation(
            f"2-part {growth.group} breaks the cyclic restriction", _evidence(E, torsion_K=T, two_part=growth.group)
        )
    cert.add("R7.cyclic", "restriction holds", two_part=growth.group)

    odd = odd_growth(E)
    _odd_step(cert, odd)
    if growth.exact:
        return _finish(E, T, cert, exact=growth.group.direct_sum(odd.group), radicands=growth.radicands)

    candidates = _cyclic_candidates(E, T, growth, odd.group)
    if not candidates:
        raise ClassificationViolation(
            f"No possible group exceeds the lower bound {growth.group}", _evidence(E, torsion_K=T, two_part=growth.group)
        )
    logger.info(f"{E} over {E.field!r}: halving stopped at {growth.group}; returning {len(candidates)} candidates")
    return _finish(E, T, cert, candidates=candidates, radicands=growth.radicands)


def classify_growth(E: Curve) -> GrowthResult:
    """
    Compute E(F)_tors with a certificate.

    Args:
        E: Curve over Q(i) or Q(sqrt(-3))

    Returns:
        GrowthResult, exact or with a candidate set

    Raises:
        ClassificationViolation: If any computed group contradicts the known
            restrictions or classification lists
    """
    T = torsion_K(E)
    split = two_torsion_split(E)
    cert = GrowthCertificate()
    logger.debug(f"Classifying {E} over {E.field!r}: E(K) = {T}, 2-division cubic {split.kind}")

    if split.kind == "irreducible":
        cert.add("R1", "E(F) has no point of order 2", cubic=split.cubic)
        odd = odd_growth(E)
        _odd_step(cert, odd)
        return _finish(E, T, cert, exact=odd.group)

    if split.kind == "full":
        group, radicands = _full_two_torsion(E, T, cert)
        return _finish(E, T, cert, exact=group, radicands=radicands)

    return _one_root(E, T, cert)


def replay_certificate(E: Curve, result: GrowthResult) -> bool:
    """Re-run the classification and compare the certificate step by step."""
    again = classify_growth(E)
    return again.certificate == result.certificate and again.groups() == result.groups()
