"""Check reports shared by the modular-curve checks and the verify suites."""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass(frozen=True)
class Check:
    """One expected-versus-computed comparison, tagged with the fact it reproduces."""

    check: str
    anchor: str
    expected: Any
    computed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check,
            "anchor": self.anchor,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
        }


@dataclass
class Report:
    """A named list of checks."""

    name: str
    checks: List[Check] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, check: str, anchor: str, expected: Any, computed: Any) -> Check:
        entry = Check(check, anchor, expected, computed)
        self.checks.append(entry)
        return entry

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }
