"""
Growth Rules and Certificates.

The registry of decision rules the classifier may cite, and the
certificate and result types it produces.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..qfield.field import FieldElem
from ..torsion.groups import TorsionGroup
from ..utils.errors import InvalidInputError


@dataclass(frozen=True)
class Rule:
    """A registered rule: identifier, cited result and a short statement."""

    rule_id: str
    anchor: str
    statement: str


_RULES = (
    Rule("R1", "2-torsion over F", "An irreducible 2-division cubic gives no point of order 2 over F"),
    Rule("R2", "Growth of Z/2+Z/8", "E(K) = Z/2+Z/8 gives Z/4+Z/16, refining Z/4+Z/16, Z/4+Z/32 (or Z/4+Z/64)"),
    Rule("R3", "Growth of Z/2+Z/6", "E(K) = Z/2+Z/6 gives E(F) = Z/4+Z/12"),
    Rule("R4", "Growth of Z/4+Z/4", "E(K) = Z/4+Z/4 forces K = Q(i) and gives E(F) = Z/8+Z/8"),
    Rule("R5", "Growth of Z/2+Z/4", "E(K) = Z/2+Z/4 gives Z/4+Z/8, or Z/8+Z/8 over Q(sqrt(-3)) iff E^(-1)(K) has a point of order 4"),
    Rule("R6", "Growth of Z/2+Z/2", "E(F) is twist invariant; with no enlarging twist E(F) = Z/4+Z/4"),
    Rule("R6a", "Twist with a point of order 4", "Some twist has a K-point of order 4 iff two square classes agree"),
    Rule("R6b", "Twist with a point of order 3", "A K-root of psi_3 gives a twist with a K-point of order 3"),
    Rule("R6c", "Default full 2-torsion growth", "Every twist has torsion Z/2+Z/2, so E(F) = Z/4+Z/4"),
    Rule("R7", "Cyclic 2-part growth", "Halving heights of the 2-torsion points over F bound the 2-part"),
    Rule("R7.cyclic", "Cyclic restriction", "Over Q(i), Z/4+Z/4 is not in E(F); over Q(sqrt(-3)), Z/8+Z/8 is not"),
    Rule("R7.square", "Square root lemma", "sqrt(a) is a square in F only if a or -a is a square in K (a square over Q(i))"),
    Rule("R7.square_i", "Square root of a*i", "Over Q(sqrt(-3)), sqrt(a*i) is never a square in F"),
    Rule("R7.kummer", "Kummer criterion", "z in a radical tower M is a square in F iff z lies in K* M*^2"),
    Rule("R7.order4", "Order-4 points over F", "E(F) has a point of order 4 iff some twist has a K-point of order 4"),
    Rule("R8", "Forbidden subgroups", "No Z/4+Z/4+Z/5, Z/12+Z/12, Z/4+Z/32 or Z/4+Z/8+Z/3 in E(F)"),
    Rule("ODD", "Odd torsion over F", "A K-root of psi_p gives a twist with a K-point of order p"),
    Rule("MAIN", "Classification over F", "E(F)_tors is one of the listed groups for the active field"),
)

RULES: Dict[str, Rule] = {rule.rule_id: rule for rule in _RULES}


@dataclass(frozen=True)
class CertificateStep:
    """
    One applied rule.

    Attributes:
        rule_id: Key into RULES
        inputs: Exact input values, as text
        conclusion: What the rule established
    """

    rule_id: str
    inputs: Tuple[Tuple[str, str], ...]
    conclusion: str

    def __post_init__(self):
        if self.rule_id not in RULES:
            raise InvalidInputError(f"Unregistered rule {self.rule_id!r}")

    @property
    def anchor(self) -> str:
        return RULES[self.rule_id].anchor

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rule": self.rule_id,
            "anchor": self.anchor,
            "inputs": dict(self.inputs),
            "conclusion": self.conclusion,
        }


class GrowthCertificate:
    """An ordered list of certificate steps."""

    def __init__(self, steps: Optional[List[CertificateStep]] = None):
        self.steps: List[CertificateStep] = list(steps or [])

    def add(self, rule_id: str, conclusion: str, **inputs: Any) -> CertificateStep:
        step = CertificateStep(
            rule_id=rule_id,
            inputs=tuple((k, str(v)) for k, v in inputs.items()),
            conclusion=conclusion,
        )
        self.steps.append(step)
        return step

    def extend(self, other: "GrowthCertificate"):
        self.steps.extend(other.steps)

    def rule_ids(self) -> List[str]:
        return [step.rule_id for step in self.steps]

    def to_list(self) -> List[Dict[str, Any]]:
        return [step.to_dict() for step in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def __eq__(self, other) -> bool:
        return isinstance(other, GrowthCertificate) and self.steps == other.steps


@dataclass(frozen=True)
class GrowthResult:
    """
    E(F)_tors as an exact group or a certified candidate set.

    Attributes:
        torsion_K: E(K)_tors
        exact: The group when it is pinned down
        candidates: The possible groups otherwise
        certificate: Rules applied, in order
        witness_radicands: Radicands over which the claimed growth is realized
    """

    torsion_K: TorsionGroup
    exact: Optional[TorsionGroup]
    candidates: Tuple[TorsionGroup, ...]
    certificate: GrowthCertificate
    witness_radicands: Tuple[FieldElem, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.exact is not None and self.candidates:
            raise InvalidInputError("An exact result carries no candidate set")
        if self.exact is None and not self.candidates:
            raise InvalidInputError("An inexact result needs a nonempty candidate set")

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def groups(self) -> Tuple[TorsionGroup, ...]:
        return (self.exact,) if self.exact is not None else self.candidates

    def torsion_F_dict(self) -> Dict[str, Any]:
        if self.exact is not None:
            return {"exact": self.exact.format()}
        return {"candidates": [G.format() for G in self.candidates]}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "torsion_K": self.torsion_K.format(),
            "torsion_F": self.torsion_F_dict(),
            "certificate": self.certificate.to_list(),
        }
