"""
End-to-end walkthrough of the spin-3/2 example: the Y+3/2 eigenprojector,
the two membership systems and their solutions, memberships and valuations
of the three fixture kets, probabilities, and the logic demonstrations.
Every computed value is checked against its known value; any failed check
makes the command exit 1.
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..clinalg import ComplexMatrix, LeastSquaresSolution, least_squares_solve
from ..errors import CheckFailedError
from ..logic import Atomic, distributivity_check, evaluate, meet_membership_rule
from ..models.run_config import RunConfig
from ..models.walkthrough_report import WalkthroughReport
from ..render import render
from ..sampling import check_biconditionals, overdetermination_report
from ..spin import SpinFixtureSet, eigenprojector, eigenvalues, spin32_fixtures, spin_matrices
from ..types import CommandResult, Membership, MembershipMethod, Semantics, TruthValue
from ..valuation import born_probability, check_consistency, membership, truth_from_probability, valuate

logger = logging.getLogger(__name__)

MATRIX_ATOL = 1e-12
SOLUTION_ATOL = 1e-9
PROBABILITY_ATOL = 1e-9

_ROOT2 = np.sqrt(2.0)
_ROOT3 = np.sqrt(3.0)

RANGE_SOLUTION = np.array([[1j / (2.0 * _ROOT2)]])
KERNEL_SOLUTION = np.array([[-1j * _ROOT3], [2.0], [1j]]) / (8.0 * _ROOT2)

# ket name -> (membership, supervaluation, quantum logic, probability)
EXPECTED: Dict[str, Tuple[Membership, TruthValue, TruthValue, float]] = {
    "ket_Y32": (Membership.IN_RANGE, TruthValue.TRUE, TruthValue.TRUE, 1.0),
    "ket_Y12": (Membership.IN_KERNEL, TruthValue.FALSE, TruthValue.FALSE, 0.0),
    "ket_X32": (Membership.NEITHER, TruthValue.GAP, TruthValue.FALSE, 0.125),
}


def _pairs(m: ComplexMatrix) -> List[List[float]]:
    return m.to_dict()["data"]


def _max_deviation(actual: ComplexMatrix, expected: np.ndarray) -> float:
    return float(np.max(np.abs(actual.data - expected), initial=0.0))


def _walkthrough_systems(fixtures: SpinFixtureSet) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """The integer-scaled systems: ``8 P`` column 1 and the first three columns of ``8 (I - P)``."""
    p = fixtures.projector_Y32
    r = ComplexMatrix(8.0 * p.matrix.data[:, [0]])
    k = ComplexMatrix(8.0 * p.complement().matrix.data[:, :3])
    return r, k


def _system_section(a: ComplexMatrix, solution: LeastSquaresSolution, rhs: str) -> Dict[str, Any]:
    return {
        "rhs": rhs,
        "coefficients": a.to_dict(),
        "solution": _pairs(solution.x),
        "residual": solution.residual_norm,
        "rank": solution.rank,
    }


def _eigenprojector_section(report: WalkthroughReport, fixtures: SpinFixtureSet, config: RunConfig) -> None:
    sy = spin_matrices(1.5).sy
    derived = eigenprojector(sy, 1.5, config.tolerance, label="Y+3/2")
    deviation = _max_deviation(derived.matrix, fixtures.projector_Y32.matrix.data)
    spectrum = sorted(float(value) for value in eigenvalues(sy))
    report.sections["eigenprojector"] = {
        "j": "3/2",
        "eigenvalue": 1.5,
        "spectrum": spectrum,
        "max_abs_deviation": deviation,
    }
    report.add_check("eigenprojector(Sy, +3/2) equals Y+3/2", deviation <= MATRIX_ATOL, 0.0, deviation)
    report.add_check(
        "spectrum of Sy is {-3/2, -1/2, 1/2, 3/2}",
        bool(np.allclose(spectrum, [-1.5, -0.5, 0.5, 1.5], atol=MATRIX_ATOL)),
        [-1.5, -0.5, 0.5, 1.5],
        spectrum,
    )


def _linear_systems_section(report: WalkthroughReport, fixtures: SpinFixtureSet, config: RunConfig) -> None:
    r, k = _walkthrough_systems(fixtures)
    range_solution = least_squares_solve(r, fixtures.ket_Y32.vector, config.tolerance)
    kernel_solution = least_squares_solve(k, fixtures.ket_Y12.vector, config.tolerance)
    report.sections["linear_systems"] = {
        "range": _system_section(r, range_solution, fixtures.ket_Y32.display_label),
        "kernel": _system_section(k, kernel_solution, fixtures.ket_Y12.display_label),
    }

    range_error = _max_deviation(range_solution.x, RANGE_SOLUTION)
    kernel_error = _max_deviation(kernel_solution.x, KERNEL_SOLUTION)
    report.add_check(
        "range system solution is i/(2 sqrt 2)",
        range_error <= SOLUTION_ATOL,
        _pairs(ComplexMatrix(RANGE_SOLUTION)),
        _pairs(range_solution.x),
    )
    report.add_check(
        "range system residual",
        range_solution.residual_norm <= MATRIX_ATOL,
        0.0,
        range_solution.residual_norm,
    )
    report.add_check(
        "kernel system solution is (-i sqrt 3, 2, i)/(8 sqrt 2)",
        kernel_error <= SOLUTION_ATOL,
        _pairs(ComplexMatrix(KERNEL_SOLUTION)),
        _pairs(kernel_solution.x),
    )
    report.add_check(
        "kernel system residual",
        kernel_solution.residual_norm <= SOLUTION_ATOL,
        0.0,
        kernel_solution.residual_norm,
    )

    overdetermination = overdetermination_report(fixtures.projector_Y32, config.tolerance)
    report.sections["overdetermination"] = overdetermination.to_dict()
    report.add_check(
        "Y+3/2 systems have 1 and 3 unknowns in C^4",
        (overdetermination.n, overdetermination.m, overdetermination.k) == (4, 1, 3),
        [4, 1, 3],
        [overdetermination.n, overdetermination.m, overdetermination.k],
    )


def _kets_section(report: WalkthroughReport, fixtures: SpinFixtureSet, config: RunConfig) -> None:
    p = fixtures.projector_Y32
    tol = config.tolerance
    memberships: Dict[str, Any] = {}
    valuations: Dict[str, Any] = {}
    probabilities: Dict[str, Any] = {}
    biconditionals: Dict[str, Any] = {}

    for name, ket in fixtures.kets.items():
        label = ket.display_label
        expected_membership, expected_sv, expected_ql, expected_probability = EXPECTED[name]

        memberships[label] = {}
        for method in MembershipMethod:
            outcome = membership(ket, p, method, tol)
            memberships[label][method.value] = {
                "membership": outcome.membership.value,
                "residual_range": outcome.residual_range,
                "residual_kernel": outcome.residual_kernel,
            }
            report.add_check(
                f"{label} membership via {method.value}",
                outcome.membership is expected_membership,
                expected_membership.value,
                outcome.membership.value,
            )

        sv = valuate(ket, p, Semantics.SUPERVALUATION, tol)
        ql = valuate(ket, p, Semantics.QUANTUM_LOGIC, tol)
        valuations[label] = {"SV": sv.value, "QL": ql.value}
        report.add_check(f"{label} under SV", sv is expected_sv, expected_sv.value, sv.value)
        report.add_check(f"{label} under QL", ql is expected_ql, expected_ql.value, ql.value)

        probability = born_probability(ket, p)
        consistency = check_consistency(ket, p, tol)
        from_probability = truth_from_probability(probability, tol)
        probabilities[label] = {
            "probability": probability,
            "consistent": consistency.consistent,
            "from_probability": from_probability.value,
        }
        report.add_check(
            f"{label} probability",
            abs(probability - expected_probability) <= PROBABILITY_ATOL,
            expected_probability,
            probability,
        )
        report.add_check(f"{label} truth agrees with probability", consistency.consistent, True, consistency.consistent)
        report.add_check(
            f"{label} degenerate valuation of the probability",
            from_probability is sv,
            sv.value,
            from_probability.value,
        )

        biconditional = check_biconditionals(ket, p, tol)
        biconditionals[label] = biconditional.to_dict()
        report.add_check(f"{label} membership iff solvable", biconditional.holds, True, biconditional.holds)

    report.sections["memberships"] = memberships
    report.sections["valuations"] = valuations
    report.sections["probabilities"] = probabilities
    report.sections["biconditionals"] = biconditionals


def _logic_section(report: WalkthroughReport, fixtures: SpinFixtureSet, config: RunConfig) -> None:
    tol = config.tolerance
    psi = fixtures.ket_X32
    p = Atomic(fixtures.projector_Y32, "P")
    q = Atomic(fixtures.projector_X32, "Q")

    middle = {
        str(formula): evaluate(formula, psi, Semantics.SUPERVALUATION, tol)
        for formula in (p, ~p, p | ~p, p & ~p)
    }
    report.sections["excluded_middle"] = {"state": psi.display_label, **{k: v.value for k, v in middle.items()}}
    report.add_check("P | !P is true at |X+3/2>", middle["P | !P"] is TruthValue.TRUE, "true", middle["P | !P"].value)
    report.add_check("P & !P is false at |X+3/2>", middle["P & !P"] is TruthValue.FALSE, "false", middle["P & !P"].value)

    conjunction = meet_membership_rule(psi, q, p, tol)
    report.sections["meet_rule"] = {"state": psi.display_label, "Q & P": conjunction.value}
    report.add_check("membership conjunction of Q and P is a gap", conjunction is TruthValue.GAP, "gap", conjunction.value)

    distributivity = distributivity_check(fixtures.projector_X32, fixtures.projector_Y32, psi, tol)
    report.sections["distributivity"] = {
        "lhs": "Q & (P | !P)",
        "rhs": "(Q & P) | (Q & !P)",
        **distributivity.to_dict(),
    }
    report.add_check(
        "distributivity fails: lhs true, rhs false",
        (distributivity.lhs_value, distributivity.rhs_value) == (TruthValue.TRUE, TruthValue.FALSE),
        ["true", "false"],
        [distributivity.lhs_value.value, distributivity.rhs_value.value],
    )


def _build_report(*, config: RunConfig) -> WalkthroughReport:
    fixtures = spin32_fixtures()
    report = WalkthroughReport(config=config)
    _eigenprojector_section(report, fixtures, config)
    _linear_systems_section(report, fixtures, config)
    _kets_section(report, fixtures, config)
    _logic_section(report, fixtures, config)
    for check in report.failed_checks:
        logger.error("check failed: %s (expected %r, got %r)", check.name, check.expected, check.actual)
    return report


def run_detailed(*, config: RunConfig) -> CommandResult[WalkthroughReport]:
    """Replay the spin-3/2 example and check every value

     The report is written in full even when checks fail.

    Args:
        config (RunConfig): Tolerance and output format.

    Returns:
        CommandResult[WalkthroughReport]: exit code 1 if any check failed.
    """

    report = _build_report(config=config)
    return CommandResult(
        exit_code=0 if report.passed else CheckFailedError.exit_code,
        parsed=report,
        content=render(report.to_dict(), config.output_format),
    )


def run(*, config: RunConfig) -> Optional[WalkthroughReport]:
    """Replay the spin-3/2 example and check every value

    Raises:
        errors.CheckFailedError: If any check failed.

    Returns:
        WalkthroughReport
    """

    report = run_detailed(config=config).parsed
    if report is not None and not report.passed:
        names = ", ".join(check.name for check in report.failed_checks)
        raise CheckFailedError(detail=names)
    return report
