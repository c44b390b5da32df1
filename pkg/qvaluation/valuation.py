"""
The membership predicate and the two valuation semantics built on it.

A proposition is a projector P and a state is a unit vector psi. The state
lies in ran(P), in ker(P), or in neither; the last case is a truth-value gap
under supervaluation and plain falsity under the total quantum-logic
semantics. Membership is decided either from projection residuals or by
solving the linear systems ``R X = psi`` and ``K X = psi`` whose coefficient
matrices hold the independent columns of ``P`` and ``I - P``.

Probabilities are Born values ``<psi|P|psi>``.
"""

import logging
from typing import Any, Dict, Optional, Tuple, Type, TypeVar

import numpy as np
from attrs import define, field

from .clinalg import ComplexMatrix, LeastSquaresSolution, independent_columns, least_squares_solve
from .errors import InvalidStateError, PayloadError, require_same_dimension
from .models.consistency_report import ConsistencyReport
from .models.valuation_report import ValuationReport
from .subspace import Projector
from .types import (
    DEFAULT_TOLERANCE,
    Membership,
    MembershipMethod,
    Semantics,
    Tolerance,
    TruthValue,
)

logger = logging.getLogger(__name__)

UNIT_NORM_SLACK = 1e-12

V = TypeVar("V", bound="StateVector")


def _to_column(value: Any) -> ComplexMatrix:
    return value if isinstance(value, ComplexMatrix) else ComplexMatrix(value)


@define(frozen=True, eq=False)
class StateVector:
    """A pure state: a unit column vector in C^n.

    Attributes:
        vector (ComplexMatrix): n x 1 column with ``| ||psi|| - 1 | <= 1e-12``.
        label (Optional[str]): Display name, e.g. ``|Y+3/2>``.
    """

    vector: ComplexMatrix = field(converter=_to_column)
    label: Optional[str] = None

    def __attrs_post_init__(self) -> None:
        if not self.vector.is_column:
            raise InvalidStateError(
                f"State must be a column vector, got {self.vector.rows}x{self.vector.cols}"
            )
        norm = self.vector.norm()
        if norm == 0.0:
            raise InvalidStateError("State vector must be non-zero")
        if abs(norm - 1.0) > UNIT_NORM_SLACK:
            raise InvalidStateError(f"State vector must have unit norm, got {norm!r}")

    @classmethod
    def normalized(cls: Type[V], vector: Any, label: Optional[str] = None) -> V:
        """Scale a non-zero vector to unit norm."""
        column = _to_column(vector)
        norm = column.norm()
        if norm == 0.0:
            raise InvalidStateError("Cannot normalize the zero vector")
        return cls(ComplexMatrix(column.data / norm), label=label)

    @property
    def dim(self) -> int:
        return self.vector.rows

    @property
    def display_label(self) -> str:
        return self.label if self.label is not None else "psi"

    def to_dict(self) -> Dict[str, Any]:
        field_dict: Dict[str, Any] = {}
        if self.label is not None:
            field_dict["label"] = self.label
        field_dict["vector"] = self.vector.to_dict()
        return field_dict

    @classmethod
    def from_dict(cls: Type[V], src_dict: Dict[str, Any]) -> V:
        """Parse either ``{"label": ..., "vector": <matrix>}`` or a bare column matrix."""
        if not isinstance(src_dict, dict):
            raise PayloadError("State payload must be a JSON object")
        d = src_dict.copy()
        label = d.pop("label", None)
        if "vector" in d:
            vector = ComplexMatrix.from_dict(d.pop("vector"))
        else:
            vector = ComplexMatrix.from_dict(d)
        if not vector.is_column:
            raise PayloadError("State must be an n x 1 column", field="cols")
        return cls(vector, label=label)


@define(frozen=True)
class MembershipOutcome:
    """Where a state sits relative to a projector, and the evidence for it.

    Attributes:
        membership (Membership): ``IN_RANGE``, ``IN_KERNEL`` or ``NEITHER``.
        method (MembershipMethod): How the decision was made.
        residual_range (float): ``||(I-P) psi||`` or the residual of ``R X = psi``.
        residual_kernel (float): ``||P psi||`` or the residual of ``K X = psi``.
        range_solution (Optional[LeastSquaresSolution]): Solve of ``R X = psi``
            (linear-system method only).
        kernel_solution (Optional[LeastSquaresSolution]): Solve of ``K X = psi``
            (linear-system method only).
    """

    membership: Membership
    method: MembershipMethod
    residual_range: float
    residual_kernel: float
    range_solution: Optional[LeastSquaresSolution] = None
    kernel_solution: Optional[LeastSquaresSolution] = None

    @property
    def residuals(self) -> Tuple[float, float]:
        return self.residual_range, self.residual_kernel


def _check_inputs(psi: StateVector, p: Projector) -> None:
    require_same_dimension(p.dim_ambient, psi.dim, "State and projector dimensions differ")


def linear_systems(p: Projector, tol: Tolerance = DEFAULT_TOLERANCE) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """The coefficient matrices ``R`` and ``K`` of the two membership systems.

    ``R`` holds a maximal independent set of columns of ``P`` (m <= n
    unknowns) and ``K`` one of ``I - P`` (k <= n unknowns).
    """
    r = p.matrix.columns(independent_columns(p.matrix, tol))
    complement = p.complement().matrix
    k = complement.columns(independent_columns(complement, tol))
    return r, k


def membership(
    psi: StateVector,
    p: Projector,
    method: MembershipMethod = MembershipMethod.RESIDUAL,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> MembershipOutcome:
    """Decide whether ``psi`` lies in ran(P), in ker(P), or in neither.

    Raises:
        DimensionMismatchError: If ``psi`` and ``P`` live in different spaces.
    """
    _check_inputs(psi, p)
    method = MembershipMethod(method)
    v = psi.vector
    cutoff = tol.residual_rel * v.norm()

    range_solution: Optional[LeastSquaresSolution] = None
    kernel_solution: Optional[LeastSquaresSolution] = None
    if method is MembershipMethod.RESIDUAL:
        projected = p.matrix.data @ v.data
        residual_kernel = float(np.linalg.norm(projected))
        residual_range = float(np.linalg.norm(v.data - projected))
    else:
        r, k = linear_systems(p, tol)
        range_solution = least_squares_solve(r, v, tol)
        kernel_solution = least_squares_solve(k, v, tol)
        residual_range = range_solution.residual_norm
        residual_kernel = kernel_solution.residual_norm

    if residual_range <= cutoff:
        outcome = Membership.IN_RANGE
    elif residual_kernel <= cutoff:
        outcome = Membership.IN_KERNEL
    else:
        outcome = Membership.NEITHER

    logger.debug(
        "membership %s in %s via %s: range residual %.3e, kernel residual %.3e -> %s",
        psi.display_label,
        p.label or "P",
        method.value,
        residual_range,
        residual_kernel,
        outcome.value,
    )
    return MembershipOutcome(
        membership=outcome,
        method=method,
        residual_range=residual_range,
        residual_kernel=residual_kernel,
        range_solution=range_solution,
        kernel_solution=kernel_solution,
    )


def truth_of(outcome: Membership, semantics: Semantics = Semantics.SUPERVALUATION) -> TruthValue:
    """Map a membership outcome to a truth value under the given semantics."""
    if outcome is Membership.IN_RANGE:
        return TruthValue.TRUE
    if outcome is Membership.IN_KERNEL:
        return TruthValue.FALSE
    if Semantics(semantics) is Semantics.QUANTUM_LOGIC:
        return TruthValue.FALSE
    return TruthValue.GAP


def valuate(
    psi: StateVector,
    p: Projector,
    semantics: Semantics = Semantics.SUPERVALUATION,
    tol: Tolerance = DEFAULT_TOLERANCE,
    method: MembershipMethod = MembershipMethod.RESIDUAL,
) -> TruthValue:
    """Truth value of the proposition ``P`` in the state ``psi``."""
    return truth_of(membership(psi, p, method, tol).membership, semantics)


def decompose(psi: StateVector, p: Projector) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """Split ``psi`` into its range part ``P psi`` and kernel part ``(I-P) psi``."""
    _check_inputs(psi, p)
    range_part = p.matrix.data @ psi.vector.data
    kernel_part = psi.vector.data - range_part
    return ComplexMatrix(range_part), ComplexMatrix(kernel_part)


def born_probability(psi: StateVector, p: Projector) -> float:
    """``<psi|P|psi> = ||P psi||^2``, clamped to [0, 1]."""
    _check_inputs(psi, p)
    projected = p.matrix.data @ psi.vector.data
    value = float(np.vdot(projected, projected).real)
    return min(1.0, max(0.0, value))


def truth_from_probability(probability: float, tol: Tolerance = DEFAULT_TOLERANCE) -> TruthValue:
    """The degenerate valuation of a probability: 1 is true, 0 is false, the rest a gap."""
    band = tol.probability_band
    if abs(probability - 1.0) <= band:
        return TruthValue.TRUE
    if probability <= band:
        return TruthValue.FALSE
    return TruthValue.GAP


def check_consistency(
    psi: StateVector,
    p: Projector,
    tol: Tolerance = DEFAULT_TOLERANCE,
    semantics: Semantics = Semantics.SUPERVALUATION,
    method: MembershipMethod = MembershipMethod.RESIDUAL,
) -> ConsistencyReport:
    """Check the assigned truth value against the Born probability.

    True requires probability 1 and false (under supervaluation) probability
    0, both within ``tol.probability_band``. A gap requires the probability to
    lie strictly inside ``(band, 1 - band)``. The upper side is checked as
    ``complement_probability > band`` so that values near 1 are not lost to
    rounding.
    """
    semantics = Semantics(semantics)
    truth = valuate(psi, p, semantics, tol, method)
    probability = born_probability(psi, p)
    complement_probability = born_probability(psi, p.complement())
    band = tol.probability_band

    if truth is TruthValue.TRUE:
        consistent = abs(probability - 1.0) <= band
    elif truth is TruthValue.FALSE and semantics is Semantics.SUPERVALUATION:
        consistent = probability <= band
    elif truth is TruthValue.GAP:
        consistent = probability > band and complement_probability > band
    else:
        consistent = True

    if not consistent:
        logger.warning(
            "inconsistent valuation of %s in %s: truth %s with probability %r",
            p.label or "P",
            psi.display_label,
            truth.value,
            probability,
        )
    return ConsistencyReport(
        truth=truth,
        probability=probability,
        complement_probability=complement_probability,
        consistent=consistent,
        semantics=semantics,
    )


def valuation_report(
    psi: StateVector,
    p: Projector,
    semantics: Semantics = Semantics.SUPERVALUATION,
    method: MembershipMethod = MembershipMethod.RESIDUAL,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> ValuationReport:
    """Valuate ``P`` in ``psi`` and collect the evidence into a report."""
    semantics = Semantics(semantics)
    outcome = membership(psi, p, method, tol)
    return ValuationReport(
        state=psi.display_label,
        proposition=p.label or "P",
        semantics=semantics,
        truth=truth_of(outcome.membership, semantics),
        probability=born_probability(psi, p),
        residual_range=outcome.residual_range,
        residual_kernel=outcome.residual_kernel,
        method=outcome.method,
    )


__all__ = [
    "MembershipOutcome",
    "StateVector",
    "born_probability",
    "check_consistency",
    "decompose",
    "linear_systems",
    "membership",
    "truth_from_probability",
    "truth_of",
    "valuate",
    "valuation_report",
]
