"""
Contains error types for qvaluation, covering malformed inputs, violated
operator invariants and failed self-checks.
"""
from typing import Any, Optional


class QValuationError(Exception):
    """Base exception class for all qvaluation errors."""

    exit_code: int = 2

    def __init__(
        self,
        message: str,
        error_type: str,
        code: Optional[str] = None,
        detail: Optional[str] = None,
        field: Optional[str] = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.type = error_type
        self.code = code
        self.detail = detail
        self.field = field


class InvalidMatrixError(QValuationError):
    """Raised when a matrix has a bad shape or non-finite entries."""

    def __init__(self, message: str = "Invalid matrix", **kwargs: Any) -> None:
        super().__init__(message=message, error_type="invalid_matrix_error", **kwargs)


class DimensionMismatchError(QValuationError):
    """Raised when operands live in different ambient spaces."""

    def __init__(
        self,
        message: str = "Dimension mismatch",
        expected: Optional[int] = None,
        actual: Optional[int] = None,
        **kwargs: Any,
    ) -> None:
        if expected is not None and actual is not None:
            message = f"{message}: expected dimension {expected}, got {actual}"
        super().__init__(message=message, error_type="dimension_mismatch_error", **kwargs)
        self.expected = expected
        self.actual = actual


class InvalidProjectorError(QValuationError):
    """Raised when a matrix is not Hermitian or not idempotent."""

    def __init__(self, message: str = "Matrix is not a projector", **kwargs: Any) -> None:
        super().__init__(message=message, error_type="invalid_projector_error", **kwargs)


class InvalidStateError(QValuationError):
    """Raised for zero vectors or vectors that are not unit norm."""

    def __init__(self, message: str = "Invalid state vector", **kwargs: Any) -> None:
        super().__init__(message=message, error_type="invalid_state_error", **kwargs)


class InvalidRankError(QValuationError):
    """Raised when a requested projector rank is trivial or out of range."""

    def __init__(
        self,
        message: str = "Invalid projector rank",
        rank: Optional[int] = None,
        dimension: Optional[int] = None,
        **kwargs: Any,
    ) -> None:
        if rank is not None and dimension is not None:
            message = f"{message}: rank {rank} is not in [1, {dimension - 1}]"
        super().__init__(message=message, error_type="invalid_rank_error", **kwargs)
        self.rank = rank
        self.dimension = dimension


class InvalidSpinError(QValuationError):
    """Raised when j is not a positive integer or half-integer."""

    def __init__(self, message: str = "Invalid spin quantum number", **kwargs: Any) -> None:
        super().__init__(message=message, error_type="invalid_spin_error", **kwargs)


class EigenvalueNotFoundError(QValuationError):
    """Raised when a requested value is not an eigenvalue of the matrix."""

    def __init__(
        self,
        message: str = "Not an eigenvalue",
        eigenvalue: Optional[float] = None,
        **kwargs: Any,
    ) -> None:
        if eigenvalue is not None:
            message = f"{message}: {eigenvalue!r}"
        super().__init__(message=message, error_type="eigenvalue_not_found_error", **kwargs)
        self.eigenvalue = eigenvalue


class FormulaSyntaxError(QValuationError):
    """Raised when formula text does not parse."""

    def __init__(
        self,
        message: str = "Formula syntax error",
        position: Optional[int] = None,
        **kwargs: Any,
    ) -> None:
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message=message, error_type="formula_syntax_error", **kwargs)
        self.position = position


class UnknownAtomError(QValuationError):
    """Raised when a formula names an atom missing from the manifest."""

    def __init__(
        self,
        message: str = "Unknown atom",
        label: Optional[str] = None,
        **kwargs: Any,
    ) -> None:
        if label:
            message = f"{message}: {label}"
        super().__init__(message=message, error_type="unknown_atom_error", **kwargs)
        self.label = label


class PayloadError(QValuationError):
    """Raised when a JSON input document is malformed."""

    def __init__(self, message: str = "Malformed payload", **kwargs: Any) -> None:
        field = kwargs.get("field")
        if field:
            message = f"{message} (field '{field}')"
        super().__init__(message=message, error_type="payload_error", **kwargs)


class WitnessSearchError(QValuationError):
    """Raised when sampling exhausts its attempt budget without a gap witness."""

    exit_code = 1

    def __init__(
        self,
        message: str = "No gap witness found",
        attempts: Optional[int] = None,
        **kwargs: Any,
    ) -> None:
        if attempts is not None:
            message = f"{message} after {attempts} attempts; check the tolerance settings"
        super().__init__(message=message, error_type="witness_search_error", **kwargs)
        self.attempts = attempts


class CheckFailedError(QValuationError):
    """Raised when a walkthrough self-check does not reproduce its expected value."""

    exit_code = 1

    def __init__(self, message: str = "Self-check failed", **kwargs: Any) -> None:
        super().__init__(message=message, error_type="check_failed_error", **kwargs)


def require_same_dimension(expected: int, actual: int, what: str = "Dimension mismatch") -> None:
    """Raise DimensionMismatchError unless both dimensions agree."""
    if expected != actual:
        raise DimensionMismatchError(what, expected=expected, actual=actual)


__all__ = [
    "QValuationError",
    "InvalidMatrixError",
    "DimensionMismatchError",
    "InvalidProjectorError",
    "InvalidStateError",
    "InvalidRankError",
    "InvalidSpinError",
    "EigenvalueNotFoundError",
    "FormulaSyntaxError",
    "UnknownAtomError",
    "PayloadError",
    "WitnessSearchError",
    "CheckFailedError",
    "require_same_dimension",
]
