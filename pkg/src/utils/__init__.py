"""
Utilities Package.

Logging, configuration and the exception hierarchy. Corpus metrics live in
src.utils.metrics, which depends on the arithmetic packages.
"""

from .config import Settings, configure, get_settings
from .logger import get_logger, get_pipeline_logger, get_suite_logger, setup_global_logging

__all__ = [
    "Settings",
    "configure",
    "get_settings",
    "get_logger",
    "get_pipeline_logger",
    "get_suite_logger",
    "setup_global_logging",
]
