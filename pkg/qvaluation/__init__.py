"""Truth values, gaps and probabilities of quantum propositions.

A proposition is a closed subspace of C^n, held as its orthogonal projector.
A state makes it true when the state lies in the range, false when it lies
in the kernel, and leaves a truth-value gap otherwise. This library computes
those valuations with explicit numerical tolerances, evaluates compound
formulas through the subspace lattice, and samples random states to show how
rarely a proposition receives a classical value.

Basic usage:
    ```python
    from qvaluation import Semantics, spin32_fixtures, valuate, born_probability

    fx = spin32_fixtures()
    valuate(fx.ket_X32, fx.projector_Y32)                          # TruthValue.GAP
    valuate(fx.ket_X32, fx.projector_Y32, Semantics.QUANTUM_LOGIC)  # TruthValue.FALSE
    born_probability(fx.ket_X32, fx.projector_Y32)                 # 0.125
    ```
"""

from .clinalg import ComplexMatrix, LeastSquaresSolution
from .errors import (
    CheckFailedError,
    DimensionMismatchError,
    EigenvalueNotFoundError,
    FormulaSyntaxError,
    InvalidMatrixError,
    InvalidProjectorError,
    InvalidRankError,
    InvalidSpinError,
    InvalidStateError,
    PayloadError,
    QValuationError,
    UnknownAtomError,
    WitnessSearchError,
)
from .logic import And, Atomic, Formula, Not, Or, evaluate, parse_formula, represent
from .sampling import find_gap_witness, gap_frequency, haar_state, random_projector
from .spin import eigenprojector, spin32_fixtures, spin_matrices
from .subspace import Projector, Subspace
from .types import (
    DEFAULT_TOLERANCE,
    UNSET,
    Membership,
    MembershipMethod,
    Semantics,
    Tolerance,
    TruthValue,
)
from .valuation import StateVector, born_probability, check_consistency, membership, valuate

__version__ = "0.1.0"

__all__ = [
    # Values
    "ComplexMatrix",
    "LeastSquaresSolution",
    "Projector",
    "StateVector",
    "Subspace",
    # Types
    "DEFAULT_TOLERANCE",
    "Membership",
    "MembershipMethod",
    "Semantics",
    "Tolerance",
    "TruthValue",
    "UNSET",
    # Valuation
    "born_probability",
    "check_consistency",
    "membership",
    "valuate",
    # Logic
    "And",
    "Atomic",
    "Formula",
    "Not",
    "Or",
    "evaluate",
    "parse_formula",
    "represent",
    # Spin
    "eigenprojector",
    "spin32_fixtures",
    "spin_matrices",
    # Sampling
    "find_gap_witness",
    "gap_frequency",
    "haar_state",
    "random_projector",
    # Errors
    "QValuationError",
    "CheckFailedError",
    "DimensionMismatchError",
    "EigenvalueNotFoundError",
    "FormulaSyntaxError",
    "InvalidMatrixError",
    "InvalidProjectorError",
    "InvalidRankError",
    "InvalidSpinError",
    "InvalidStateError",
    "PayloadError",
    "UnknownAtomError",
    "WitnessSearchError",
    # Version info
    "__version__",
]

# Set default logging handler to avoid "No handler found" warnings.
import logging

logging.getLogger(__name__).addHandler(logging.NullHandler())
