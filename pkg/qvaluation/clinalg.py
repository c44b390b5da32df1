"""
Dense complex linear algebra: the matrix value type plus adjoints, ranks,
orthonormal bases, null spaces and least-squares solves.

Every operation is a pure function of its inputs. Matrices are immutable:
the backing array is copied on construction and marked read-only.
"""

import logging
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Type, TypeVar, Union

import numpy as np
import scipy.linalg
from attrs import define, field

from .errors import InvalidMatrixError, PayloadError
from .types import DEFAULT_TOLERANCE, Tolerance

logger = logging.getLogger(__name__)

MAX_DIMENSION = 1024

T = TypeVar("T", bound="ComplexMatrix")

MatrixLike = Union["ComplexMatrix", np.ndarray, Sequence[Any]]


def _as_complex_array(value: Any) -> np.ndarray:
    if isinstance(value, ComplexMatrix):
        return value.data
    try:
        array = np.array(value, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InvalidMatrixError(f"Cannot build a complex matrix: {exc}") from exc
    if array.ndim == 1:
        array = array.reshape(-1, 1)
    if array.ndim != 2:
        raise InvalidMatrixError(f"Expected a 2-D matrix, got {array.ndim} dimensions")
    array.setflags(write=False)
    return array


def _check_entries(instance: "ComplexMatrix", attribute: Any, value: np.ndarray) -> None:
    rows, cols = value.shape
    if rows > MAX_DIMENSION or cols > MAX_DIMENSION:
        raise InvalidMatrixError(
            f"Matrix {rows}x{cols} exceeds the supported dimension {MAX_DIMENSION}"
        )
    if not np.all(np.isfinite(value)):
        raise InvalidMatrixError("Matrix entries must be finite (no NaN or Inf)")


def _parse_scalar(entry: Any, index: int) -> complex:
    if not isinstance(entry, (list, tuple)) or len(entry) != 2:
        raise PayloadError("Each entry must be an [re, im] pair", field=f"data[{index}]")
    try:
        return complex(float(entry[0]), float(entry[1]))
    except (TypeError, ValueError) as exc:
        raise PayloadError(f"Entry is not numeric: {exc}", field=f"data[{index}]") from exc


def _plain_float(value: float) -> float:
    # folds -0.0 into 0.0 so serialized output is stable
    return float(value) + 0.0


@define(frozen=True, eq=False)
class ComplexMatrix:
    """A dense, immutable, double-precision complex matrix.

    Column vectors are n x 1 matrices; 1-D input is read as a column.

    Attributes:
        data (numpy.ndarray): Read-only complex128 array of shape (rows, cols).
    """

    data: np.ndarray = field(converter=_as_complex_array, validator=_check_entries)

    @classmethod
    def identity(cls: Type[T], n: int) -> T:
        return cls(np.eye(n, dtype=np.complex128))

    @classmethod
    def zeros(cls: Type[T], rows: int, cols: int) -> T:
        return cls(np.zeros((rows, cols), dtype=np.complex128))

    @classmethod
    def hstack(cls: Type[T], blocks: Iterable["ComplexMatrix"], rows: int) -> T:
        arrays = [block.data for block in blocks]
        if not arrays:
            return cls.zeros(rows, 0)
        return cls(np.hstack(arrays))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_column(self) -> bool:
        return self.cols == 1

    def adjoint(self) -> "ComplexMatrix":
        return adjoint(self)

    def norm(self) -> float:
        """Frobenius norm; the Euclidean norm for a column."""
        return float(np.linalg.norm(self.data))

    def column(self, j: int) -> "ComplexMatrix":
        return ComplexMatrix(self.data[:, [j]])

    def columns(self, indices: Sequence[int]) -> "ComplexMatrix":
        return ComplexMatrix(self.data[:, list(indices)])

    def allclose(self, other: MatrixLike, atol: float = 1e-12) -> bool:
        other_data = _as_complex_array(other)
        if other_data.shape != self.data.shape:
            return False
        return bool(np.max(np.abs(self.data - other_data), initial=0.0) <= atol)

    def __array__(self, dtype: Any = None, copy: Any = None) -> np.ndarray:
        if dtype is None:
            return np.array(self.data)
        return np.array(self.data, dtype=dtype)

    def __matmul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        return ComplexMatrix(self.data @ _as_complex_array(other))

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        return ComplexMatrix(self.data + _as_complex_array(other))

    def __sub__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        return ComplexMatrix(self.data - _as_complex_array(other))

    def __mul__(self, scalar: complex) -> "ComplexMatrix":
        return ComplexMatrix(self.data * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "ComplexMatrix":
        return ComplexMatrix(-self.data)

    def __repr__(self) -> str:
        return f"ComplexMatrix(rows={self.rows}, cols={self.cols})"

    def to_dict(self) -> Dict[str, Any]:
        data: List[List[float]] = [
            [_plain_float(z.real), _plain_float(z.imag)] for z in self.data.ravel()
        ]
        return {"rows": self.rows, "cols": self.cols, "data": data}

    @classmethod
    def from_dict(cls: Type[T], src_dict: Dict[str, Any]) -> T:
        if not isinstance(src_dict, dict):
            raise PayloadError("Matrix payload must be a JSON object")
        d = src_dict.copy()
        for key in ("rows", "cols", "data"):
            if key not in d:
                raise PayloadError("Missing required key", field=key)

        rows = d.pop("rows")
        cols = d.pop("cols")
        entries = d.pop("data")
        for name, value in (("rows", rows), ("cols", cols)):
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise PayloadError("Must be a non-negative integer", field=name)
        if not isinstance(entries, list):
            raise PayloadError("Must be a list of [re, im] pairs", field="data")
        if len(entries) != rows * cols:
            raise PayloadError(
                f"Expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}",
                field="data",
            )

        values = [_parse_scalar(entry, i) for i, entry in enumerate(entries)]
        array = np.array(values, dtype=np.complex128).reshape(rows, cols)
        try:
            return cls(array)
        except InvalidMatrixError as exc:
            raise PayloadError(exc.message, field="data") from exc


@define(frozen=True)
class LeastSquaresSolution:
    """Result of a least-squares solve of ``A x = b``.

    Attributes:
        x: The minimizer; the minimum-norm one when ``A`` is rank deficient.
        residual_norm: ``||A x - b||_2``.
        rank: Numerical rank of ``A`` used by the solver.
        rank_deficient: True when ``rank < cols(A)``.
    """

    x: ComplexMatrix
    residual_norm: float
    rank: int
    rank_deficient: bool

    def is_solution(self, rhs_norm: float, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        """Whether the system counts as solvable at this tolerance."""
        return self.residual_norm <= tol.residual_rel * rhs_norm


def adjoint(m: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose."""
    return ComplexMatrix(m.data.conj().T)


def singular_values(m: ComplexMatrix) -> np.ndarray:
    if m.data.size == 0:
        return np.zeros(0)
    return scipy.linalg.svdvals(m.data)


def _rank_from_singular_values(s: np.ndarray, tol: Tolerance) -> int:
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s >= tol.rank_rel * s[0]))


def rank(m: ComplexMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> int:
    """Number of singular values at or above ``rank_rel * sigma_max``."""
    return _rank_from_singular_values(singular_values(m), tol)


def nullity(m: ComplexMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> int:
    return m.cols - rank(m, tol)


def orthonormal_column_basis(m: ComplexMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> ComplexMatrix:
    """Orthonormal columns spanning the column space of ``m``.

    Uses column-pivoted QR, so dependent columns drop out the way they would
    when pruning a spanning list down to a basis. The zero matrix yields a
    matrix with no columns.
    """
    r = rank(m, tol)
    if r == 0:
        return ComplexMatrix.zeros(m.rows, 0)
    q, _, _ = scipy.linalg.qr(m.data, mode="economic", pivoting=True)
    return ComplexMatrix(q[:, :r])


def independent_columns(m: ComplexMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> List[int]:
    """Indices of a maximal linearly independent set of columns of ``m``.

    The indices come from the column pivoting order and are returned sorted.
    """
    r = rank(m, tol)
    if r == 0:
        return []
    _, _, pivots = scipy.linalg.qr(m.data, mode="economic", pivoting=True)
    return sorted(int(j) for j in pivots[:r])


def null_space_basis(m: ComplexMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> ComplexMatrix:
    """Orthonormal columns spanning ``{x : m x = 0}``."""
    if m.cols == 0:
        return ComplexMatrix.zeros(0, 0)
    if m.rows == 0:
        return ComplexMatrix.identity(m.cols)
    _, s, vh = scipy.linalg.svd(m.data, full_matrices=True)
    r = _rank_from_singular_values(s, tol)
    return ComplexMatrix(vh[r:].conj().T)


def least_squares_solve(
    a: ComplexMatrix,
    b: ComplexMatrix,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> LeastSquaresSolution:
    """Minimize ``||A x - b||_2`` over complex columns ``x``.

    Raises:
        InvalidMatrixError: If ``b`` is not a column or its row count differs
            from ``A``'s.
    """
    if not b.is_column:
        raise InvalidMatrixError(f"Right-hand side must be a column, got {b.rows}x{b.cols}")
    if a.rows != b.rows:
        raise InvalidMatrixError(f"System has {a.rows} equations but b has {b.rows} rows")

    if a.cols == 0:
        return LeastSquaresSolution(
            x=ComplexMatrix.zeros(0, 1),
            residual_norm=b.norm(),
            rank=0,
            rank_deficient=False,
        )

    x, _, solver_rank, _ = scipy.linalg.lstsq(a.data, b.data, cond=tol.rank_rel)
    solution = ComplexMatrix(x)
    residual = float(np.linalg.norm(a.data @ x - b.data))
    deficient = int(solver_rank) < a.cols
    if deficient:
        logger.debug(
            "least squares: %dx%d system is rank deficient (rank %d), minimum-norm solution",
            a.rows,
            a.cols,
            solver_rank,
        )
    return LeastSquaresSolution(
        x=solution,
        residual_norm=residual,
        rank=int(solver_rank),
        rank_deficient=deficient,
    )


__all__ = [
    "ComplexMatrix",
    "LeastSquaresSolution",
    "MAX_DIMENSION",
    "adjoint",
    "independent_columns",
    "least_squares_solve",
    "null_space_basis",
    "nullity",
    "orthonormal_column_basis",
    "rank",
    "singular_values",
]
