"""Core modules for configuration, errors, logging and shared documents."""

from signrank.core.config import Settings, settings
from signrank.core.logging import configure_logging
from signrank.core.models import (
    CheckResult,
    CommandOutcome,
    IncidenceDocument,
    SearchBudget,
    VerificationReport,
)

__all__ = [
    "Settings",
    "settings",
    "configure_logging",
    "CheckResult",
    "CommandOutcome",
    "IncidenceDocument",
    "SearchBudget",
    "VerificationReport",
]
