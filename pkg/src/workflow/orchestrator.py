"""
Verification Orchestrator.

This module runs the verification suites through a LangGraph pipeline in a
fixed sequential order (cusps, inventories, fermat, jacobian, jinv,
divpoly, growth, diophantine), timing each suite and collecting failures
without stopping the run.
"""

import time
from datetime import datetime
from typing import TYPE_CHECKING, Any, Callable, Dict, List, Optional

from langgraph.graph import END, StateGraph
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from ..utils.errors import ClassificationViolation, VerificationMismatch
from ..utils.logger import get_pipeline_logger, log_pipeline_complete, log_pipeline_start, log_suite_execution
from .state import VerificationState, add_error, add_violation, create_initial_state, get_state_summary, validate_state

if TYPE_CHECKING:
    from ..suites import BaseSuite


class PipelineMetrics:
    """Tracks timings and failures of one verification run."""

    def __init__(self):
        self.start_time: Optional[datetime] = None
        self.end_time: Optional[datetime] = None
        self.suite_timings: Dict[str, Dict[str, Any]] = {}
        self.errors: List[Dict[str, Any]] = []

    def start_pipeline(self):
        self.start_time = datetime.now()

    def end_pipeline(self):
        self.end_time = datetime.now()

    def record_suite_timing(self, suite_name: str, duration: float, status: str):
        """Record timing and status for a suite."""
        self.suite_timings[suite_name] = {"duration": duration, "status": status}

    def add_error(self, suite_name: str, error: str):
        self.errors.append({"suite": suite_name, "error": error})

    def get_summary(self) -> Dict[str, Any]:
        """Get a summary of all metrics."""
        total_duration = None
        if self.start_time and self.end_time:
            total_duration = (self.end_time - self.start_time).total_seconds()
        return {
            "total_duration_seconds": total_duration,
            "suite_timings": self.suite_timings,
            "error_count": len(self.errors),
            "suites_completed": len([t for t in self.suite_timings.values() if t["status"] == "completed"]),
            "suites_failed": len([t for t in self.suite_timings.values() if t["status"] == "failed"]),
        }


class VerificationOrchestrator:
    """
    Runs the requested verification suites as a LangGraph pipeline.

    A suite that raises is recorded as failed (with the violation evidence
    when there is one) and the pipeline moves on to the next suite.
    """

    def __init__(self, suites: List[str], console: Optional[Console] = None):
        """
        Build the pipeline for a set of suites.

        Args:
            suites: Suite names, or ["all"]
            console: Console for progress output (stderr by default)
        """
        self.console = console or Console(stderr=True)
        self.initial_state = create_initial_state(suites)
        # Suites import the state module, so the registry is loaded here.
        from ..suites import build_suites

        self.suites: List["BaseSuite"] = build_suites(self.initial_state["suites"])
        self.metrics = PipelineMetrics()
        self.logger = get_pipeline_logger("orchestrator")
        self.workflow = self._build_workflow()
        self.logger.debug(f"Pipeline built with suites {[s.name for s in self.suites]}")

    def _build_workflow(self):
        """
        Build the LangGraph pipeline with one node per suite.

        Returns:
            Compiled StateGraph
        """
        workflow = StateGraph(VerificationState)
        names = [suite.name for suite in self.suites]
        for position, suite in enumerate(self.suites, start=1):
            workflow.add_node(suite.name, self._make_node(suite, position, len(self.suites)))
        for current, following in zip(names, names[1:]):
            workflow.add_edge(current, following)
        workflow.set_entry_point(names[0])
        workflow.add_edge(names[-1], END)
        return workflow.compile()

    def _make_node(self, suite: "BaseSuite", position: int, total: int) -> Callable[[VerificationState], VerificationState]:
        def node(state: VerificationState) -> VerificationState:
            return self._run_suite(suite, position, total, state)

        return node

    def _run_suite(self, suite: "BaseSuite", position: int, total: int, state: VerificationState) -> VerificationState:
        """Execute one suite with timing and error capture."""
        start_time = time.time()
        self.console.print(f"[bold]Step {position}/{total}: {suite.name}[/bold] [dim]{escape(suite.description)}[/dim]")
        try:
            result = suite.process(dict(state))
            duration = time.time() - start_time
            self.metrics.record_suite_timing(suite.name, duration, "completed")
            return VerificationState(**result)
        except Exception as e:
            duration = time.time() - start_time
            error_msg = f"{suite.name} failed: {e}"
            self.console.print(f"[red]{escape(error_msg)}[/red]")
            self.logger.error(error_msg)

            self.metrics.record_suite_timing(suite.name, duration, "failed")
            self.metrics.add_error(suite.name, error_msg)
            log_suite_execution(suite.name, "failed", duration, str(e))

            state_copy = dict(state)
            state_copy = add_error(VerificationState(**state_copy), error_msg)
            if isinstance(e, ClassificationViolation):
                state_copy = add_violation(state_copy, suite.name, str(e), e.evidence)
            elif isinstance(e, VerificationMismatch):
                state_copy = add_violation(
                    state_copy, suite.name, str(e), {"check": e.check, "expected": e.expected, "computed": e.computed}
                )
            return state_copy

    def run(self) -> Dict[str, Any]:
        """
        Execute the pipeline.

        Returns:
            Final state as a dict, with "summary", "performance_metrics",
            "run_id" and "passed" added
        """
        run_id = f"verify_{int(time.time())}"
        self.logger = get_pipeline_logger(run_id)
        self.metrics = PipelineMetrics()
        log_pipeline_start(run_id, self.initial_state["suites"])

        validation = validate_state(self.initial_state)
        if not validation["valid"]:
            raise ValueError(f"Initial state validation failed: {validation['errors']}")

        self.metrics.start_pipeline()
        start_time = time.time()
        final_state = self.workflow.invoke(self.initial_state)
        self.metrics.end_pipeline()

        result = dict(final_state)
        result["summary"] = get_state_summary(final_state)
        result["performance_metrics"] = self.metrics.get_summary()
        result["run_id"] = run_id
        result["passed"] = (
            not result["errors"]
            and result["checks_failed"] == 0
            and len(result["reports"]) == len(result["suites"])
        )
        log_pipeline_complete(run_id, time.time() - start_time, result["checks_failed"] + len(result["errors"]))
        return result

    def display_results(self, result: Dict[str, Any]):
        """Print one row per check and a closing status line."""
        for name in result["suites"]:
            report = result["reports"].get(name)
            if report is None:
                self.console.print(f"[red]{name}: no report[/red]")
                continue
            table = Table(title=escape(f"{name}: {report.get('description', '')}"), show_lines=False)
            table.add_column("Check", style="cyan")
            table.add_column("Anchor", style="dim")
            table.add_column("Expected")
            table.add_column("Computed")
            table.add_column("", justify="center")
            for check in report["checks"]:
                mark = "[green]ok[/green]" if check["passed"] else "[red]FAIL[/red]"
                cells = (check["check"], check["anchor"], check["expected"], check["computed"])
                table.add_row(*(escape(str(c)) for c in cells), mark)
            self.console.print(table)

        timings = result["performance_metrics"]["suite_timings"]
        total = sum(t["duration"] for t in timings.values())
        status = "[bold green]all checks passed[/bold green]" if result["passed"] else "[bold red]verification failed[/bold red]"
        self.console.print(f"{status} ({result['checks_run']} checks, {total:.1f}s)")
