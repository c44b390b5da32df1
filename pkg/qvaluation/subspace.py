"""
Closed linear subspaces of C^n and the ortholattice operations on them.

A ``Subspace`` is stored as an orthonormal column basis; raw spanning lists
are canonicalized through ``Subspace.span``. A ``Projector`` is a validated
Hermitian idempotent matrix.
"""

import logging
from typing import Any, Dict, Optional, Type, TypeVar

import numpy as np
from attrs import define, field

from .clinalg import ComplexMatrix, adjoint, null_space_basis, orthonormal_column_basis
from .errors import (
    InvalidProjectorError,
    InvalidStateError,
    PayloadError,
    require_same_dimension,
)
from .types import DEFAULT_TOLERANCE, Tolerance

logger = logging.getLogger(__name__)

P = TypeVar("P", bound="Projector")
S = TypeVar("S", bound="Subspace")


def _to_matrix(value: Any) -> ComplexMatrix:
    return value if isinstance(value, ComplexMatrix) else ComplexMatrix(value)


@define(frozen=True, eq=False)
class Projector:
    """An orthogonal projection operator on C^n.

    Construction validates squareness, Hermiticity and idempotence within
    ``tolerance.projector_slack`` (Frobenius norm).

    Attributes:
        matrix (ComplexMatrix): The n x n matrix.
        label (Optional[str]): Name of the proposition the projector represents.
        tolerance (Tolerance): Slack used for validation.
    """

    matrix: ComplexMatrix = field(converter=_to_matrix)
    label: Optional[str] = None
    tolerance: Tolerance = field(default=DEFAULT_TOLERANCE, repr=False)

    def __attrs_post_init__(self) -> None:
        m = self.matrix.data
        if m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise InvalidProjectorError(f"Projector must be a non-empty square matrix, got {m.shape}")
        slack = self.tolerance.projector_slack
        hermitian_error = float(np.linalg.norm(m - m.conj().T))
        if hermitian_error > slack:
            raise InvalidProjectorError(
                f"Matrix is not Hermitian: ||P - P^dagger||_F = {hermitian_error:.3e}"
            )
        idempotent_error = float(np.linalg.norm(m @ m - m))
        if idempotent_error > slack:
            raise InvalidProjectorError(
                f"Matrix is not idempotent: ||P^2 - P||_F = {idempotent_error:.3e}"
            )

    @classmethod
    def identity(cls: Type[P], n: int, label: Optional[str] = None) -> P:
        return cls(ComplexMatrix.identity(n), label=label)

    @classmethod
    def zero(cls: Type[P], n: int, label: Optional[str] = None) -> P:
        return cls(ComplexMatrix.zeros(n, n), label=label)

    @classmethod
    def onto(cls: Type[P], vector: ComplexMatrix, label: Optional[str] = None) -> P:
        """Rank-one projector ``|v><v| / <v|v>`` onto the line through ``vector``."""
        v = _to_matrix(vector).data
        norm_sq = float(np.vdot(v, v).real)
        if norm_sq == 0.0:
            raise InvalidStateError("Cannot project onto the zero vector")
        return cls(ComplexMatrix((v @ v.conj().T) / norm_sq), label=label)

    @property
    def dim_ambient(self) -> int:
        return self.matrix.rows

    def complement(self, label: Optional[str] = None) -> "Projector":
        """The projector ``I - P`` onto the orthocomplement (the negation)."""
        if label is None and self.label:
            label = f"!{self.label}"
        identity = np.eye(self.dim_ambient, dtype=np.complex128)
        return Projector(
            ComplexMatrix(identity - self.matrix.data),
            label=label,
            tolerance=self.tolerance,
        )

    def apply(self, vector: ComplexMatrix) -> ComplexMatrix:
        require_same_dimension(self.dim_ambient, vector.rows)
        return self.matrix @ vector

    def to_dict(self) -> Dict[str, Any]:
        field_dict: Dict[str, Any] = self.matrix.to_dict()
        field_dict["validated"] = True
        if self.label is not None:
            field_dict["label"] = self.label
        return field_dict

    @classmethod
    def from_dict(cls: Type[P], src_dict: Dict[str, Any], tolerance: Tolerance = DEFAULT_TOLERANCE) -> P:
        if not isinstance(src_dict, dict):
            raise PayloadError("Projector payload must be a JSON object")
        d = src_dict.copy()
        label = d.pop("label", None)
        d.pop("validated", None)
        matrix = ComplexMatrix.from_dict(d)
        return cls(matrix, label=label, tolerance=tolerance)


@define(frozen=True, eq=False)
class Subspace:
    """A closed linear subspace of C^n held as an orthonormal basis.

    ``dim == 0`` is the zero subspace and ``dim == dim_ambient`` is the whole
    space. Use ``Subspace.span`` to build one from arbitrary spanning columns.

    Attributes:
        basis (ComplexMatrix): n x d matrix with orthonormal columns.
        tolerance (Tolerance): Slack used to validate orthonormality, carried to
            the projector built from the subspace.
    """

    basis: ComplexMatrix = field(converter=_to_matrix)
    tolerance: Tolerance = field(default=DEFAULT_TOLERANCE, repr=False)

    def __attrs_post_init__(self) -> None:
        if self.basis.cols == 0:
            return
        b = self.basis.data
        error = float(np.linalg.norm(b.conj().T @ b - np.eye(self.basis.cols)))
        if error > self.tolerance.projector_slack:
            raise InvalidProjectorError(
                f"Subspace basis is not orthonormal: ||B^dagger B - I||_F = {error:.3e}"
            )

    @classmethod
    def zero(cls: Type[S], n: int, tol: Tolerance = DEFAULT_TOLERANCE) -> S:
        return cls(ComplexMatrix.zeros(n, 0), tolerance=tol)

    @classmethod
    def whole(cls: Type[S], n: int, tol: Tolerance = DEFAULT_TOLERANCE) -> S:
        return cls(ComplexMatrix.identity(n), tolerance=tol)

    @classmethod
    def span(cls: Type[S], vectors: Any, tol: Tolerance = DEFAULT_TOLERANCE) -> S:
        """The subspace spanned by the columns of ``vectors``."""
        return cls(orthonormal_column_basis(_to_matrix(vectors), tol), tolerance=tol)

    @property
    def dim_ambient(self) -> int:
        return self.basis.rows

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_whole(self) -> bool:
        return self.dim == self.dim_ambient

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, dim_ambient={self.dim_ambient})"

    def to_dict(self) -> Dict[str, Any]:
        return {"ambient": self.dim_ambient, "basis": self.basis.to_dict()}

    @classmethod
    def from_dict(cls: Type[S], src_dict: Dict[str, Any], tol: Tolerance = DEFAULT_TOLERANCE) -> S:
        if not isinstance(src_dict, dict):
            raise PayloadError("Subspace payload must be a JSON object")
        d = src_dict.copy()
        if "basis" not in d:
            raise PayloadError("Missing required key", field="basis")
        basis = ComplexMatrix.from_dict(d.pop("basis"))
        ambient = d.pop("ambient", basis.rows)
        if ambient != basis.rows:
            raise PayloadError(
                f"Basis has {basis.rows} rows but ambient dimension is {ambient}",
                field="ambient",
            )
        return cls.span(basis, tol)


def range_of(p: Projector, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """The range ``{v : P v = v}``, i.e. the column span of P."""
    return Subspace(orthonormal_column_basis(p.matrix, tol), tolerance=tol)


def kernel_of(p: Projector, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """The kernel ``{v : P v = 0}``, computed as the range of ``I - P``."""
    return range_of(p.complement(), tol)


def projector_of(s: Subspace) -> Projector:
    """The orthogonal projector ``B B^dagger`` onto ``s``, validated with the subspace's tolerance."""
    b = s.basis.data
    m = b @ b.conj().T
    return Projector(ComplexMatrix((m + m.conj().T) / 2.0), tolerance=s.tolerance)


def distance_to(s: Subspace, v: ComplexMatrix) -> float:
    """``||v - B B^dagger v||``, the distance from ``v`` to ``s``."""
    require_same_dimension(s.dim_ambient, v.rows)
    b = s.basis.data
    if s.dim == 0:
        return v.norm()
    residual = v.data - b @ (b.conj().T @ v.data)
    return float(np.linalg.norm(residual))


def contains(s: Subspace, v: ComplexMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Whether the non-zero column ``v`` lies in ``s``.

    Raises:
        InvalidStateError: If ``v`` is the zero vector.
    """
    norm = v.norm()
    if norm == 0.0:
        raise InvalidStateError("Membership of the zero vector is not defined")
    return distance_to(s, v) <= tol.residual_rel * norm


def ortho_complement(a: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """Vectors orthogonal to every vector of ``a``."""
    n = a.dim_ambient
    if a.is_zero:
        return Subspace.whole(n, tol)
    if a.is_whole:
        return Subspace.zero(n, tol)
    return Subspace(null_space_basis(adjoint(a.basis), tol), tolerance=tol)


def join(a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """Closed span of ``a`` and ``b``."""
    require_same_dimension(a.dim_ambient, b.dim_ambient)
    stacked = ComplexMatrix.hstack([a.basis, b.basis], rows=a.dim_ambient)
    return Subspace(orthonormal_column_basis(stacked, tol), tolerance=tol)


def meet(a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """Intersection of ``a`` and ``b``, as the complement of the join of complements."""
    require_same_dimension(a.dim_ambient, b.dim_ambient)
    return ortho_complement(join(ortho_complement(a, tol), ortho_complement(b, tol), tol), tol)


def equals(a: Subspace, b: Subspace, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Whether the two subspaces have the same orthogonal projector."""
    require_same_dimension(a.dim_ambient, b.dim_ambient)
    if a.dim != b.dim:
        return False
    difference = projector_of(a).matrix.data - projector_of(b).matrix.data
    return float(np.linalg.norm(difference)) <= tol.projector_slack


__all__ = [
    "Projector",
    "Subspace",
    "contains",
    "distance_to",
    "equals",
    "join",
    "kernel_of",
    "meet",
    "ortho_complement",
    "projector_of",
    "range_of",
]
