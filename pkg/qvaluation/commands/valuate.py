from pathlib import Path
from typing import Optional, Tuple, Union

from ..documents import load_projector, load_state
from ..models.run_config import RunConfig
from ..models.valuation_report import ValuationReport
from ..render import render
from ..subspace import Projector
from ..types import CommandResult
from ..valuation import StateVector, check_consistency, valuation_report


def _load_inputs(
    *,
    state_path: Union[str, Path],
    projector_path: Union[str, Path],
    config: RunConfig,
) -> Tuple[StateVector, Projector]:
    psi = load_state(state_path)
    p = load_projector(projector_path, config.tolerance)
    return psi, p


def _build_report(*, psi: StateVector, p: Projector, config: RunConfig) -> ValuationReport:
    report = valuation_report(psi, p, config.semantics, config.method, config.tolerance)
    consistency = check_consistency(psi, p, config.tolerance, config.semantics, config.method)
    report["consistent"] = consistency.consistent
    report.config = config
    return report


def _build_result(*, report: ValuationReport, config: RunConfig) -> CommandResult[ValuationReport]:
    return CommandResult(
        exit_code=0,
        parsed=report,
        content=render(report.to_dict(), config.output_format),
    )


def run_detailed(
    *,
    config: RunConfig,
    state_path: Union[str, Path],
    projector_path: Union[str, Path],
) -> CommandResult[ValuationReport]:
    """Valuate the proposition in ``projector_path`` at the state in ``state_path``

     The exit code is 0 whatever the truth value; a gap is a result, not an error.

    Args:
        config (RunConfig): Tolerance, semantics, membership method and output format.
        state_path (Union[str, Path]): State JSON, a bare column or ``{"label", "vector"}``.
        projector_path (Union[str, Path]): Projector JSON.

    Raises:
        errors.PayloadError: If either file is unreadable or malformed.
        errors.QValuationError: If an input violates a projector or state invariant.

    Returns:
        CommandResult[ValuationReport]
    """

    psi, p = _load_inputs(state_path=state_path, projector_path=projector_path, config=config)
    report = _build_report(psi=psi, p=p, config=config)
    return _build_result(report=report, config=config)


def run(
    *,
    config: RunConfig,
    state_path: Union[str, Path],
    projector_path: Union[str, Path],
) -> Optional[ValuationReport]:
    """Valuate the proposition in ``projector_path`` at the state in ``state_path``

    Returns:
        ValuationReport
    """

    return run_detailed(config=config, state_path=state_path, projector_path=projector_path).parsed
