"""
Base Suite class for the verification pipeline.

Every suite reproduces one group of published facts and reports each
comparison as a check. Suites are plain computations; the orchestrator
wraps them with timing and error handling.
"""

import time
from abc import ABC, abstractmethod
from typing import Any, Dict

from ..modcurves.report import Report
from ..utils.logger import get_suite_logger, log_suite_execution
from ..workflow.state import VerificationState, add_suite_report


class BaseSuite(ABC):
    """
    Abstract base class for verification suites.

    Subclasses implement run(); process() stores the report in the state.
    """

    name: str = ""
    description: str = ""

    def __init__(self):
        self.logger = get_suite_logger(self.name)

    @abstractmethod
    def run(self) -> Report:
        """
        Run every check of the suite.

        Returns:
            Report of the checks

        Raises:
            ClassificationViolation: If a computation leaves a proven list
            VerificationMismatch: If a strict check fails
        """

    def process(self, state: VerificationState) -> VerificationState:
        """
        Run the suite and add its report to the state.

        Args:
            state: Current verification state

        Returns:
            Updated state
        """
        start = time.perf_counter()
        report = self.run()
        duration = time.perf_counter() - start
        summary = report.to_dict()
        summary["description"] = self.description
        summary["seconds"] = round(duration, 3)
        failed = len(report.failures())
        if failed:
            self.logger.warning(f"{failed} of {len(report.checks)} checks failed in {self.name}")
        log_suite_execution(self.name, "completed", duration)
        return add_suite_report(state, self.name, summary)

    def get_info(self) -> Dict[str, Any]:
        return {"name": self.name, "description": self.description}
