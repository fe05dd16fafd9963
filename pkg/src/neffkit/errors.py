"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An input lies outside the physical or numerical domain of an operation.

    ``field`` names the offending parameter when a single one can be blamed.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class ConfigError(ValueError):
    """A run configuration is invalid; ``fields`` lists every offending entry."""

    def __init__(self, message: str, fields: list[str] | None = None):
        super().__init__(message)
        self.fields = fields or []


class UnderflowError(ArithmeticError):
    """A result is too small to represent meaningfully in double precision.

    Raised instead of silently returning 0.0 (distinct from DomainError:
    the input is legal, the output is not representable).
    """


class PoleError(ArithmeticError):
    """A transcendental expression was evaluated exactly at one of its poles."""


class SolverError(RuntimeError):
    """A root search failed where theory guarantees a root: an internal defect."""
