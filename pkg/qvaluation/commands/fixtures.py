import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..documents import atoms_manifest, write_document
from ..models.run_config import RunConfig
from ..render import render
from ..spin import spin32_fixtures
from ..subspace import kernel_of, range_of
from ..types import CommandResult

logger = logging.getLogger(__name__)

DEFAULT_FIXTURES_DIR = Path("fixtures") / "spin32"


def _documents(config: RunConfig) -> Dict[str, Any]:
    fixtures = spin32_fixtures()
    tol = config.tolerance
    documents: Dict[str, Any] = {}
    for name, projector in fixtures.projectors.items():
        documents[f"{name}.json"] = projector.to_dict()
    for name, ket in fixtures.kets.items():
        documents[f"{name}.json"] = ket.to_dict()
    documents["range_Y32.json"] = range_of(fixtures.projector_Y32, tol).to_dict()
    documents["kernel_Y32.json"] = kernel_of(fixtures.projector_Y32, tol).to_dict()
    documents["atoms.json"] = atoms_manifest({"P": "projector_Y32.json", "Q": "projector_X32.json"})
    return documents


def run_detailed(
    *,
    config: RunConfig,
    out_dir: Union[str, Path] = DEFAULT_FIXTURES_DIR,
) -> CommandResult[List[Path]]:
    """Write the spin-3/2 fixtures as JSON documents

     Writes both projectors, the three kets, the range and kernel of Y+3/2 and
    an atom manifest that ``qvaluation logic --atoms`` accepts.

    Args:
        config (RunConfig): Tolerance used for the subspace bases, and output format.
        out_dir (Union[str, Path]): Target directory, created if missing.

    Returns:
        CommandResult[List[Path]]
    """

    out = Path(out_dir)
    written = [write_document(out / name, document) for name, document in _documents(config).items()]
    logger.info("exported %d fixture files to %s", len(written), out)
    summary = {
        "directory": str(out),
        "files": [path.name for path in written],
        "config": config.to_dict(),
    }
    return CommandResult(exit_code=0, parsed=written, content=render(summary, config.output_format))


def run(*, config: RunConfig, out_dir: Union[str, Path] = DEFAULT_FIXTURES_DIR) -> Optional[List[Path]]:
    """Write the spin-3/2 fixtures as JSON documents

    Returns:
        List[Path]
    """

    return run_detailed(config=config, out_dir=out_dir).parsed
