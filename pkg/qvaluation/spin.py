"""
Spin operators in the z-basis and their eigenprojectors, plus the spin-3/2
fixtures: the projector for "spin along Y is +3/2" and the kets
``|Y+3/2>``, ``|Y+1/2>`` and ``|X+3/2>``.

Fixtures are written out entry by entry rather than derived, so a test can
compare them against ``eigenprojector`` and catch an error on either side.
"""

import logging
from fractions import Fraction
from typing import Dict, NamedTuple, Optional, Union

import numpy as np
from attrs import define

from .clinalg import ComplexMatrix
from .errors import EigenvalueNotFoundError, InvalidSpinError
from .subspace import Projector
from .types import DEFAULT_TOLERANCE, Tolerance
from .valuation import StateVector

logger = logging.getLogger(__name__)

SpinNumber = Union[int, float, Fraction]


class SpinMatrices(NamedTuple):
    sx: ComplexMatrix
    sy: ComplexMatrix
    sz: ComplexMatrix


def _validate_spin(j: SpinNumber) -> Fraction:
    try:
        twice = Fraction(j) * 2
    except (TypeError, ValueError) as exc:
        raise InvalidSpinError(f"Spin must be a number, got {j!r}") from exc
    if twice.denominator != 1 or twice <= 0:
        raise InvalidSpinError(f"Spin must be a positive integer or half-integer, got {j!r}")
    return Fraction(j)


def spin_matrices(j: SpinNumber) -> SpinMatrices:
    """Spin-j operators ``(Sx, Sy, Sz)`` in units of hbar, z-basis ordered m = j, ..., -j."""
    spin = float(_validate_spin(j))
    m = np.arange(spin, -spin - 1.0, -1.0)
    raising = np.diag(np.sqrt(spin * (spin + 1.0) - m[1:] * (m[1:] + 1.0)), k=1).astype(np.complex128)
    lowering = raising.conj().T
    sx = 0.5 * (raising + lowering)
    sy = -0.5j * (raising - lowering)
    sz = np.diag(m).astype(np.complex128)
    return SpinMatrices(ComplexMatrix(sx), ComplexMatrix(sy), ComplexMatrix(sz))


def eigenprojector(
    m: ComplexMatrix,
    eigenvalue: float,
    tol: Tolerance = DEFAULT_TOLERANCE,
    label: Optional[str] = None,
) -> Projector:
    """Projector onto the ``eigenvalue``-eigenspace of the Hermitian matrix ``m``.

    Raises:
        EigenvalueNotFoundError: If no eigenvalue lies within tolerance of ``eigenvalue``.
    """
    values, vectors = np.linalg.eigh(m.data)
    scale = max(1.0, float(np.max(np.abs(values), initial=0.0)))
    selected = np.abs(values - eigenvalue) <= tol.residual_rel * scale
    if not np.any(selected):
        raise EigenvalueNotFoundError(eigenvalue=eigenvalue)
    basis = vectors[:, selected]
    logger.debug("eigenvalue %r has multiplicity %d", eigenvalue, basis.shape[1])
    projector = basis @ basis.conj().T
    return Projector(ComplexMatrix((projector + projector.conj().T) / 2.0), label=label, tolerance=tol)


def eigenvalues(m: ComplexMatrix) -> np.ndarray:
    return np.linalg.eigvalsh(m.data)


_S3 = np.sqrt(3.0)
_KET_SCALE = 1.0 / (2.0 * np.sqrt(2.0))

# (1/8) [[1, -i r3, -r3, i], [i r3, 3, -3i, -r3], [-r3, 3i, 3, -i r3], [-i, -r3, i r3, 1]]
_Y32_MATRIX = (
    np.array(
        [
            [1.0, -1j * _S3, -_S3, 1j],
            [1j * _S3, 3.0, -3j, -_S3],
            [-_S3, 3j, 3.0, -1j * _S3],
            [-1j, -_S3, 1j * _S3, 1.0],
        ],
        dtype=np.complex128,
    )
    / 8.0
)

_KET_Y32 = _KET_SCALE * np.array([1j, -_S3, -1j * _S3, 1.0], dtype=np.complex128)
_KET_Y12 = _KET_SCALE * np.array([-1j * _S3, 1.0, -1j, _S3], dtype=np.complex128)
_KET_X32 = _KET_SCALE * np.array([1.0, _S3, _S3, 1.0], dtype=np.complex128)


@define(frozen=True)
class SpinFixtureSet:
    """The spin-3/2 propositions and states, all in C^4."""

    projector_Y32: Projector
    projector_X32: Projector
    ket_Y32: StateVector
    ket_Y12: StateVector
    ket_X32: StateVector

    @property
    def kets(self) -> Dict[str, StateVector]:
        return {"ket_Y32": self.ket_Y32, "ket_Y12": self.ket_Y12, "ket_X32": self.ket_X32}

    @property
    def projectors(self) -> Dict[str, Projector]:
        return {"projector_Y32": self.projector_Y32, "projector_X32": self.projector_X32}


def spin32_fixtures() -> SpinFixtureSet:
    """The hard-coded spin-3/2 fixtures."""
    ket_x32 = StateVector(_KET_X32, label="|X+3/2>")
    return SpinFixtureSet(
        projector_Y32=Projector(_Y32_MATRIX, label="Y+3/2"),
        projector_X32=Projector.onto(ket_x32.vector, label="X+3/2"),
        ket_Y32=StateVector(_KET_Y32, label="|Y+3/2>"),
        ket_Y12=StateVector(_KET_Y12, label="|Y+1/2>"),
        ket_X32=ket_x32,
    )


def fixture_atoms() -> Dict[str, Projector]:
    """Atom manifest for formulas over the fixtures: ``P`` is Y+3/2, ``Q`` is X+3/2."""
    fixtures = spin32_fixtures()
    return {"P": fixtures.projector_Y32, "Q": fixtures.projector_X32}


__all__ = [
    "SpinFixtureSet",
    "SpinMatrices",
    "eigenprojector",
    "eigenvalues",
    "fixture_atoms",
    "spin32_fixtures",
    "spin_matrices",
]
