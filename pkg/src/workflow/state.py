"""
Verification State Management.

This module defines the state that flows through the LangGraph verification
pipeline: the suites requested, each suite's report, and the errors and
classification violations collected on the way.
"""

from typing import Any, Dict, List, TypedDict

SUITE_ORDER = ("cusps", "inventories", "fermat", "jacobian", "jinv", "divpoly", "growth", "diophantine")


class VerificationState(TypedDict):
    """
    State of one verification run.

    Suites append their reports under their own name; the counters are
    totals over every report added so far.
    """

    # INPUT FIELDS
    suites: List[str]

    # SUITE OUTPUT
    reports: Dict[str, Dict[str, Any]]
    checks_run: int
    checks_failed: int
    violations: List[Dict[str, Any]]

    # METADATA
    current_step: str
    iteration_count: int
    errors: List[str]


def resolve_suites(names: List[str]) -> List[str]:
    """
    Expand "all" and put the names in pipeline order.

    Raises:
        ValueError: For an unknown suite name
    """
    if not names or "all" in names:
        return list(SUITE_ORDER)
    unknown = [n for n in names if n not in SUITE_ORDER]
    if unknown:
        raise ValueError(f"Unknown suites {unknown}; expected any of {list(SUITE_ORDER)} or 'all'")
    return [n for n in SUITE_ORDER if n in names]


def create_initial_state(suites: List[str]) -> VerificationState:
    """
    Create an initial verification state.

    Args:
        suites: Suite names, or ["all"]

    Returns:
        Initial state with empty results
    """
    return VerificationState(
        suites=resolve_suites(suites),
        reports={},
        checks_run=0,
        checks_failed=0,
        violations=[],
        current_step="initialization",
        iteration_count=0,
        errors=[],
    )


def add_suite_report(state: VerificationState, suite_name: str, report: Dict[str, Any]) -> VerificationState:
    """
    Store a suite report and update the counters.

    Args:
        state: Current state
        suite_name: Name of the suite
        report: The report as a dict with a "checks" list

    Returns:
        Updated state
    """
    checks = report.get("checks", [])
    state["reports"][suite_name] = report
    state["checks_run"] += len(checks)
    state["checks_failed"] += sum(1 for c in checks if not c.get("passed", False))
    state["current_step"] = f"{suite_name}_completed"
    state["iteration_count"] += 1
    return state


def add_error(state: VerificationState, error_message: str) -> VerificationState:
    state["errors"].append(error_message)
    return state


def add_violation(state: VerificationState, suite_name: str, message: str, evidence: Dict[str, Any]) -> VerificationState:
    """Record a classification violation with its evidence dump."""
    state["violations"].append({"suite": suite_name, "message": message, "evidence": evidence})
    return state


def validate_state(state: VerificationState) -> Dict[str, Any]:
    """
    Validate the state for consistency.

    Args:
        state: State to validate

    Returns:
        Validation results with "valid", "errors" and "warnings"
    """
    validation_results = {"valid": True, "errors": [], "warnings": []}

    for field in ("suites", "reports", "current_step"):
        if field not in state or state[field] is None:
            validation_results["errors"].append(f"Missing required field: {field}")
            validation_results["valid"] = False

    suites = state.get("suites")
    if not isinstance(suites, list) or not suites:
        validation_results["errors"].append("suites must be a non-empty list")
        validation_results["valid"] = False
    elif any(name not in SUITE_ORDER for name in suites):
        validation_results["errors"].append(f"Unknown suites in {suites}")
        validation_results["valid"] = False

    if state.get("checks_failed", 0) > state.get("checks_run", 0):
        validation_results["errors"].append("checks_failed exceeds checks_run")
        validation_results["valid"] = False

    for name in state.get("reports", {}):
        if name not in (suites or []):
            validation_results["warnings"].append(f"Report for unrequested suite {name}")

    return validation_results


def get_state_summary(state: VerificationState) -> Dict[str, Any]:
    """
    Summarize a verification state.

    Returns:
        Counts of suites, checks, failures, violations and errors
    """
    failed_suites = [name for name, report in state["reports"].items() if not report.get("passed", False)]
    return {
        "suites_requested": len(state["suites"]),
        "suites_reported": len(state["reports"]),
        "failed_suites": failed_suites,
        "checks_run": state["checks_run"],
        "checks_failed": state["checks_failed"],
        "violations": len(state["violations"]),
        "errors": len(state["errors"]),
        "current_step": state["current_step"],
    }
