"""nilgraph exceptions.

This module defines the exception hierarchy for nilgraph.
All nilgraph-specific exceptions inherit from NilGraphError.

Example:
    ```python
    from nilgraph.core.exceptions import (
        NilGraphError,
        InvalidParameterError,
        ResourceLimitExceeded,
    )

    try:
        report = analyze(parse_ring_spec("Z4096*Z2"))
    except ResourceLimitExceeded as e:
        print(f"Stage {e.stage} hit {e.resource}: {e.actual}/{e.limit}")
    except InvalidParameterError as e:
        print(f"Bad {e.parameter}: {e.value!r}")
    except NilGraphError as e:
        print(f"nilgraph error: {e}")
    ```
"""

from __future__ import annotations

from typing import Any


class NilGraphError(Exception):
    """Base exception for all nilgraph errors.

    All nilgraph-specific exceptions inherit from this class.
    """

    def __init__(self, message: str, **context: Any):
        """Initialize the exception.

        Args:
            message: Human-readable error message
            **context: Additional context for debugging
        """
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self) -> str:
        if self.context:
            ctx = ", ".join(f"{k}={v}" for k, v in self.context.items())
            return f"{self.message} ({ctx})"
        return self.message


# Input Errors


class InvalidParameterError(NilGraphError):
    """Raised when an operation receives a parameter outside its domain.

    Attributes:
        parameter: Name of the offending parameter
        value: The rejected value
        expected: Description of the accepted values
    """

    def __init__(self, parameter: str, value: Any, expected: str):
        super().__init__(
            f"Invalid {parameter}: got {value!r}, expected {expected}",
            parameter=parameter,
        )
        self.parameter = parameter
        self.value = value
        self.expected = expected


class RingSpecSyntaxError(NilGraphError):
    """Raised when a ring specification string cannot be parsed.

    Attributes:
        text: The full specification text
        position: Zero-based character offset of the error
        reason: What the parser expected
    """

    def __init__(self, text: str, position: int, reason: str):
        super().__init__(
            f"Cannot parse ring spec at position {position}: {reason}",
            text=text,
            position=position,
        )
        self.text = text
        self.position = position
        self.reason = reason

    def pointer(self) -> str:
        """Render the spec with a caret under the offending character."""
        return f"{self.text}\n{' ' * self.position}^"


# Limit Errors


class ResourceLimitExceeded(NilGraphError):
    """Raised when a configured size bound is exceeded.

    Attributes:
        resource: What was measured (ring order, vertex count, ...)
        limit: Configured bound
        actual: Measured value, if known
        stage: Analysis stage that hit the bound, if known
    """

    def __init__(
        self,
        resource: str,
        limit: int,
        actual: int | None = None,
        stage: str | None = None,
    ):
        if actual is not None:
            message = f"Resource limit exceeded: {resource} ({actual}/{limit})"
        else:
            message = f"Resource limit exceeded: {resource} (limit: {limit})"
        context: dict[str, Any] = {"resource": resource, "limit": limit}
        if stage:
            context["stage"] = stage
        super().__init__(message, **context)
        self.resource = resource
        self.limit = limit
        self.actual = actual
        self.stage = stage

    def at_stage(self, stage: str) -> ResourceLimitExceeded:
        """Return a copy naming the stage, keeping an already-set stage."""
        if self.stage:
            return self
        return ResourceLimitExceeded(self.resource, self.limit, self.actual, stage)


class UnsupportedPredictionError(NilGraphError):
    """Raised when a closed-form prediction is requested outside its hypotheses.

    Attributes:
        reason: Why the prediction does not apply
    """

    def __init__(self, reason: str):
        super().__init__(f"Prediction unsupported: {reason}", reason=reason)
        self.reason = reason


# Output Errors


class ExportError(NilGraphError):
    """Raised when a report cannot be written.

    Attributes:
        path: Target path
        error: Underlying OS error text
    """

    def __init__(self, path: str, error: str):
        super().__init__(
            f"Cannot write export to {path}: {error[:200]}",
            path=path,
        )
        self.path = path
        self.error = error


# Configuration Errors


class ConfigError(NilGraphError):
    """Base exception for configuration errors."""

    pass


class ConfigNotFoundError(ConfigError):
    """Raised when a configuration or census file is not found.

    Attributes:
        path: Path to the missing file
    """

    def __init__(self, path: str):
        super().__init__(
            f"Configuration file not found: {path}",
            path=path,
        )
        self.path = path


class ConfigValidationError(ConfigError):
    """Raised when configuration validation fails.

    Attributes:
        field: The field that failed validation
        value: The invalid value
        expected: Description of expected value
    """

    def __init__(self, field: str, value: Any, expected: str):
        super().__init__(
            f"Invalid config '{field}': got {value!r}, expected {expected}",
            field=field,
            value=value,
            expected=expected,
        )
        self.field = field
        self.value = value
        self.expected = expected
