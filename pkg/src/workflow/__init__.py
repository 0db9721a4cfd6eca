"""
Workflow Package.

This package contains the LangGraph verification pipeline and its state management.
"""

from .orchestrator import PipelineMetrics, VerificationOrchestrator
from .state import (
    SUITE_ORDER,
    VerificationState,
    add_error,
    add_suite_report,
    add_violation,
    create_initial_state,
    get_state_summary,
    resolve_suites,
    validate_state,
)

__all__ = [
    "SUITE_ORDER",
    "VerificationState",
    "add_error",
    "add_suite_report",
    "add_violation",
    "create_initial_state",
    "get_state_summary",
    "resolve_suites",
    "validate_state",
    "PipelineMetrics",
    "VerificationOrchestrator",
]
