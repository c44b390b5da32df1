from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from ..documents import load_atoms, load_state
from ..logic import evaluate, parse_formula, represent
from ..models.logic_report import LogicReport
from ..models.run_config import RunConfig
from ..render import render
from ..spin import fixture_atoms
from ..subspace import Projector
from ..types import CommandResult
from ..valuation import StateVector


def _load_inputs(
    *,
    state_path: Union[str, Path],
    atoms_path: Optional[Union[str, Path]],
    config: RunConfig,
) -> Tuple[StateVector, Dict[str, Projector]]:
    psi = load_state(state_path)
    atoms = fixture_atoms() if atoms_path is None else load_atoms(atoms_path, config.tolerance)
    return psi, atoms


def _build_report(
    *,
    formula: str,
    psi: StateVector,
    atoms: Dict[str, Projector],
    config: RunConfig,
) -> LogicReport:
    parsed = parse_formula(formula, atoms)
    return LogicReport(
        formula=str(parsed),
        state=psi.display_label,
        semantics=config.semantics,
        truth=evaluate(parsed, psi, config.semantics, config.tolerance, config.method),
        subspace_dim=represent(parsed, config.tolerance).dim,
        config=config,
    )


def run_detailed(
    *,
    config: RunConfig,
    formula: str,
    state_path: Union[str, Path],
    atoms_path: Optional[Union[str, Path]] = None,
) -> CommandResult[LogicReport]:
    """Evaluate a formula such as ``Q & (P | !P)`` at a state

     Without ``atoms_path`` the spin-3/2 atoms are used: ``P`` is Y+3/2 and
    ``Q`` is the projector on ``|X+3/2>``.

    Args:
        config (RunConfig): Tolerance, semantics, membership method and output format.
        formula (str): Formula text over ``!``, ``&``, ``|`` and parentheses.
        state_path (Union[str, Path]): State JSON.
        atoms_path (Optional[Union[str, Path]]): Atom manifest JSON.

    Raises:
        errors.FormulaSyntaxError: If the formula does not parse.
        errors.UnknownAtomError: If the formula names an atom missing from the manifest.
        errors.DimensionMismatchError: If the atoms or the state disagree on dimension.

    Returns:
        CommandResult[LogicReport]
    """

    psi, atoms = _load_inputs(state_path=state_path, atoms_path=atoms_path, config=config)
    report = _build_report(formula=formula, psi=psi, atoms=atoms, config=config)
    return CommandResult(
        exit_code=0,
        parsed=report,
        content=render(report.to_dict(), config.output_format),
    )


def run(
    *,
    config: RunConfig,
    formula: str,
    state_path: Union[str, Path],
    atoms_path: Optional[Union[str, Path]] = None,
) -> Optional[LogicReport]:
    """Evaluate a formula such as ``Q & (P | !P)`` at a state

    Returns:
        LogicReport
    """

    return run_detailed(config=config, formula=formula, state_path=state_path, atoms_path=atoms_path).parsed
