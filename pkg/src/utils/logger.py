"""
Logger Utility.

This module configures logging for the library and the CLI: a rich console
handler on stderr (so record streams on stdout stay clean) plus a plain file
handler under logs/.
"""

import logging
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

LOG_FORMAT = "[%(asctime)s] %(levelname)s [%(name)s] %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"
LOGS_DIR = Path("logs")

_stderr_console = Console(stderr=True)


def _file_handler() -> logging.FileHandler:
    LOGS_DIR.mkdir(exist_ok=True)
    handler = logging.FileHandler(LOGS_DIR / "app.log", encoding="utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT))
    return handler


def _console_handler(level: int, show_locals: bool) -> RichHandler:
    handler = RichHandler(
        console=_stderr_console,
        show_time=False,
        show_path=False,
        enable_link_path=False,
        markup=False,  # messages contain brackets like [0,0,0,4,0]
        rich_tracebacks=True,
        tracebacks_word_wrap=True,
        tracebacks_extra_lines=3,
        tracebacks_theme="monokai",
        tracebacks_show_locals=show_locals,
    )
    handler.setLevel(level)
    return handler


def get_logger(name: str) -> logging.Logger:
    """
    Get a configured logger instance with both file and console handlers.

    Args:
        name: Logger name (typically __name__)

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    logger.setLevel(logging.DEBUG)
    logger.addHandler(_file_handler())
    logger.addHandler(_console_handler(logging.WARNING, show_locals=True))
    logger.propagate = False
    return logger


def setup_global_logging(level: str = "INFO"):
    """
    Set up logging for a CLI run.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    numeric_level = getattr(logging, level.upper(), logging.INFO)

    root_logger = logging.getLogger()
    root_logger.setLevel(numeric_level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    root_logger.addHandler(_file_handler())
    root_logger.addHandler(_console_handler(numeric_level, show_locals=False))

    # Package loggers created earlier keep their own handlers; align their console level.
    for name, existing in logging.root.manager.loggerDict.items():
        if name.startswith("src") and isinstance(existing, logging.Logger):
            for handler in existing.handlers:
                if isinstance(handler, RichHandler):
                    handler.setLevel(numeric_level)

    root_logger.debug(f"Global logging configured with level: {level}")


def get_pipeline_logger(run_id: str) -> logging.Logger:
    """
    Get a logger for one verification pipeline run.

    Args:
        run_id: Unique run identifier

    Returns:
        Configured pipeline logger
    """
    return get_logger(f"src.pipeline.{run_id}")


def get_suite_logger(suite_name: str) -> logging.Logger:
    """
    Get a logger for one verification suite.

    Args:
        suite_name: Name of the suite

    Returns:
        Configured suite logger
    """
    return get_logger(f"src.suite.{suite_name}")


def log_pipeline_start(run_id: str, suites: Optional[list] = None):
    """Log the start of a verification pipeline run."""
    logger = get_pipeline_logger(run_id)
    logger.info(f"Starting verification run (ID: {run_id})")
    if suites:
        logger.debug(f"Requested suites: {suites}")


def log_pipeline_complete(run_id: str, duration: Optional[float] = None, failures: int = 0):
    """Log the completion of a verification pipeline run."""
    logger = get_pipeline_logger(run_id)
    status = "completed" if failures == 0 else f"completed with {failures} failing checks"
    message = f"Verification {status}"
    if duration:
        message += f" in {duration:.2f}s"

    if failures == 0:
        logger.info(message)
    else:
        logger.warning(message)


def log_suite_execution(suite_name: str, status: str, duration: Optional[float] = None,
                        error: Optional[str] = None):
    """Log the outcome of one verification suite."""
    logger = get_suite_logger(suite_name)

    message = f"Suite {suite_name} {status}"
    if duration:
        message += f" in {duration:.2f}s"

    if status == "failed" and error:
        logger.error(f"{message}: {error}")
    elif status == "completed":
        logger.info(message)
    else:
        logger.debug(message)
