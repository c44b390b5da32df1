"""
Reading and writing the JSON documents the commands consume and produce:
states, projectors and atom manifests.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

from .errors import PayloadError
from .render import dump_json
from .subspace import Projector
from .types import DEFAULT_TOLERANCE, Tolerance
from .valuation import StateVector

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def read_document(path: PathLike) -> Any:
    """Load one JSON document.

    Raises:
        PayloadError: If the file cannot be read or is not valid JSON.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise PayloadError(f"Cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PayloadError(
            f"{path} is not valid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}"
        ) from exc


def write_document(path: PathLike, payload: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(payload), encoding="utf-8")
    logger.debug("wrote %s", path)
    return path


def load_state(path: PathLike) -> StateVector:
    return StateVector.from_dict(read_document(path))


def load_projector(path: PathLike, tol: Tolerance = DEFAULT_TOLERANCE) -> Projector:
    return Projector.from_dict(read_document(path), tolerance=tol)


def load_atoms(path: PathLike, tol: Tolerance = DEFAULT_TOLERANCE) -> Dict[str, Projector]:
    """Load an atom manifest ``{"atoms": {label: <projector> | "file.json"}}``.

    String entries are paths relative to the manifest's directory. Atoms
    without their own label take the manifest key.

    Raises:
        PayloadError: If the manifest or any referenced projector is malformed.
    """
    path = Path(path)
    document = read_document(path)
    if not isinstance(document, dict) or not isinstance(document.get("atoms"), dict):
        raise PayloadError("Manifest must be an object with an 'atoms' object", field="atoms")

    atoms: Dict[str, Projector] = {}
    for label, entry in document["atoms"].items():
        if isinstance(entry, str):
            entry = read_document(path.parent / entry)
        if not isinstance(entry, dict):
            raise PayloadError("Atom must be a projector object or a file path", field=f"atoms.{label}")
        entry = {"label": label, **entry}
        try:
            atoms[label] = Projector.from_dict(entry, tolerance=tol)
        except PayloadError as exc:
            raise PayloadError(exc.message, field=f"atoms.{label}") from exc
    return atoms


def atoms_manifest(atoms: Dict[str, str]) -> Dict[str, Any]:
    """A manifest document pointing each label at a projector file."""
    return {"atoms": dict(atoms)}


__all__ = [
    "atoms_manifest",
    "load_atoms",
    "load_projector",
    "load_state",
    "read_document",
    "write_document",
]
