"""Error types shared across the package.

All subclass ValueError so callers can catch either the specific condition
or any validation failure with one handler. Plain ValueError is reserved
for malformed arguments (wrong type, out of declared domain).
"""
from __future__ import annotations


class InconsistentMeasurementError(ValueError):
    """Measured quantities violate a model identity (e.g. S > k or E > 1)."""


class UnboundedLimitError(ValueError):
    """A limit is requested where the model places no finite ceiling."""


class AlreadyAchievableError(ValueError):
    """A target is at or below what a single unit already delivers."""


class DegenerateScenarioError(ValueError):
    """A timing scenario carries no work at all, so ratios are undefined."""


class SchemaError(ValueError):
    """An input table is missing required columns or has unusable headers."""
