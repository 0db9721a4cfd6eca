"""
Error Types.

This module defines the exception hierarchy shared by the arithmetic core,
the classifier, the verification suites and the command-line interface.
"""

from typing import Any, Dict, Optional


class TorsionGrowthError(Exception):
    """Base class for every error raised by the package."""


class FieldParseError(TorsionGrowthError, ValueError):
    """
    Raised when field-element or curve text cannot be parsed.

    Attributes:
        token: The offending token (empty string at end of input)
        position: 0-based character offset of the token
    """

    def __init__(self, message: str, token: str = "", position: int = 0):
        super().__init__(f"{message} (token {token!r} at position {position})")
        self.token = token
        self.position = position


class NotIntegralError(TorsionGrowthError, ValueError):
    """Raised when an element is required to lie in O_K but does not."""


class ZeroDivisorError(TorsionGrowthError, ValueError):
    """Raised when an operation needs a nonzero argument."""


class FactorizationBoundError(TorsionGrowthError):
    """Raised when a norm exceeds the configured factorization bound."""


class TowerDepthError(TorsionGrowthError):
    """Raised when a radical tower would exceed the configured depth."""


class TowerMismatchError(TorsionGrowthError):
    """Raised when elements of incompatible radical towers are combined."""


class DependentRadicandError(TorsionGrowthError, ValueError):
    """Raised when a radicand is already a square in the current tower."""


class SingularCurveError(TorsionGrowthError, ValueError):
    """Raised when a Weierstrass model (or a genus-2 model) is singular."""


class ReductionError(TorsionGrowthError, ValueError):
    """Raised for reductions this package does not perform (residue characteristic 2)."""


class FieldSizeError(TorsionGrowthError, ValueError):
    """Raised when a finite field or count request is too large."""


class TorsionBoundError(TorsionGrowthError):
    """Raised when too few good primes are available for a torsion bound."""


class ClassificationViolation(TorsionGrowthError):
    """
    Raised when a computed group falls outside a proven classification list.

    Attributes:
        evidence: Exact inputs and intermediate values for the diagnostics dump
    """

    def __init__(self, message: str, evidence: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.evidence = evidence or {}


class VerificationMismatch(TorsionGrowthError):
    """Raised when a verification check disagrees with its expected value."""

    def __init__(self, check: str, expected: Any, computed: Any):
        super().__init__(f"{check}: expected {expected!r}, computed {computed!r}")
        self.check = check
        self.expected = expected
        self.computed = computed


class InvalidInputError(TorsionGrowthError, ValueError):
    """Raised when an argument is outside the documented domain of an operation."""
