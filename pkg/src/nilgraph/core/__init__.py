"""Core nilgraph components."""

from nilgraph.core.config import GenusBudget, NilGraphConfig, load_config
from nilgraph.core.exceptions import (
    ConfigError,
    ConfigNotFoundError,
    ConfigValidationError,
    ExportError,
    InvalidParameterError,
    NilGraphError,
    ResourceLimitExceeded,
    RingSpecSyntaxError,
    UnsupportedPredictionError,
)
from nilgraph.core.types import CensusSummary, TheoremVerdict, VerdictStatus

__all__ = [
    # Config
    "GenusBudget",
    "NilGraphConfig",
    "load_config",
    # Exceptions
    "ConfigError",
    "ConfigNotFoundError",
    "ConfigValidationError",
    "ExportError",
    "InvalidParameterError",
    "NilGraphError",
    "ResourceLimitExceeded",
    "RingSpecSyntaxError",
    "UnsupportedPredictionError",
    # Types
    "CensusSummary",
    "TheoremVerdict",
    "VerdictStatus",
]
