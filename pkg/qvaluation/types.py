"""
Contains shared type definitions for qvaluation.

This module provides the enums, tolerance settings and small records that
every other module passes around: truth values and their connectives,
semantics and membership selectors, and the generic command result.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Any, Generic, Literal, Optional, TypeVar

import attrs
from attrs import define, field


class UnsetType:
    """Represents an unset value, distinct from None."""

    def __bool__(self) -> Literal[False]:
        return False

    def __repr__(self) -> str:
        return "UNSET"

    def __copy__(self) -> UnsetType:
        return self

    def __deepcopy__(self, _: Any) -> UnsetType:
        return self


UNSET: UnsetType = UnsetType()
Unset = UnsetType

T = TypeVar("T")


def _open_unit_interval(instance: Any, attribute: "attrs.Attribute[float]", value: float) -> None:
    if not 0.0 < value < 1.0:
        raise ValueError(f"{attribute.name} must lie in (0, 1), got {value!r}")


@define(frozen=True)
class Tolerance:
    """Numerical cutoffs shared by every rank and membership decision.

    Attributes:
        rank_rel: Singular values below ``rank_rel * sigma_max`` count as zero.
        residual_rel: Relative residual below which a vector is taken to lie
            in a subspace or a linear system is taken to be solvable.
    """

    rank_rel: float = field(default=1e-10, converter=float, validator=_open_unit_interval)
    residual_rel: float = field(default=1e-9, converter=float, validator=_open_unit_interval)

    @property
    def projector_slack(self) -> float:
        """Frobenius slack for Hermiticity, idempotence and subspace equality."""
        return 10.0 * self.residual_rel

    @property
    def probability_band(self) -> float:
        """Band separating probabilities 0 and 1 from genuine intermediates."""
        return math.sqrt(self.residual_rel)

    def evolve(self, **changes: Any) -> Tolerance:
        return attrs.evolve(self, **changes)

    def to_dict(self) -> dict:
        return {"rank_rel": self.rank_rel, "residual_rel": self.residual_rel}


DEFAULT_TOLERANCE = Tolerance()


class TruthValue(str, Enum):
    """Three truth values: the two classical ones plus the gap.

    The connectives are strong Kleene. ``GAP`` never coerces to a bool.
    """

    TRUE = "true"
    FALSE = "false"
    GAP = "gap"

    @classmethod
    def from_bool(cls, value: bool) -> TruthValue:
        return cls.TRUE if value else cls.FALSE

    @property
    def is_bivalent(self) -> bool:
        return self is not TruthValue.GAP

    def __bool__(self) -> bool:
        if self is TruthValue.GAP:
            raise TypeError("a truth-value gap has no boolean value")
        return self is TruthValue.TRUE

    def __invert__(self) -> TruthValue:
        if self is TruthValue.TRUE:
            return TruthValue.FALSE
        if self is TruthValue.FALSE:
            return TruthValue.TRUE
        return TruthValue.GAP

    def __and__(self, other: TruthValue) -> TruthValue:  # type: ignore[override]
        if TruthValue.FALSE in (self, other):
            return TruthValue.FALSE
        if TruthValue.GAP in (self, other):
            return TruthValue.GAP
        return TruthValue.TRUE

    def __or__(self, other: TruthValue) -> TruthValue:  # type: ignore[override]
        if TruthValue.TRUE in (self, other):
            return TruthValue.TRUE
        if TruthValue.GAP in (self, other):
            return TruthValue.GAP
        return TruthValue.FALSE

    def nor(self, other: TruthValue) -> TruthValue:
        """Joint denial: true exactly when both operands are false."""
        return ~(self | other)

    def __str__(self) -> str:
        return self.value


class Semantics(str, Enum):
    """Valuation semantics for the membership predicate."""

    SUPERVALUATION = "sv"
    QUANTUM_LOGIC = "ql"


class MembershipMethod(str, Enum):
    """How membership in a range or kernel is decided."""

    RESIDUAL = "residual"
    LINEAR_SYSTEM = "linsys"


class Membership(str, Enum):
    """Where a state vector sits relative to a projector."""

    IN_RANGE = "in_range"
    IN_KERNEL = "in_kernel"
    NEITHER = "neither"


class OutputFormat(str, Enum):
    JSON = "json"
    TABLE = "table"


@define
class CommandResult(Generic[T]):
    """The outcome of running one CLI command.

    Attributes:
        exit_code: Process exit code (0 success, 1 failed check, 2 usage error).
        parsed: The report object the command produced, if any.
        content: The rendered report text written to stdout.
    """

    exit_code: int
    parsed: Optional[T]
    content: str = ""


__all__ = [
    "CommandResult",
    "DEFAULT_TOLERANCE",
    "Membership",
    "MembershipMethod",
    "OutputFormat",
    "Semantics",
    "Tolerance",
    "TruthValue",
    "UNSET",
    "Unset",
    "UnsetType",
]
