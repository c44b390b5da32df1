import json
from pathlib import Path

import numpy as np
import pytest

from qvaluation.commands import fixtures as fixtures_command
from qvaluation.models.run_config import RunConfig
from qvaluation.spin import SpinFixtureSet, spin32_fixtures
from qvaluation.types import DEFAULT_TOLERANCE, Tolerance


@pytest.fixture
def fx() -> SpinFixtureSet:
    return spin32_fixtures()


@pytest.fixture
def tol() -> Tolerance:
    return DEFAULT_TOLERANCE


@pytest.fixture
def config() -> RunConfig:
    return RunConfig()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def fixture_dir(tmp_path: Path, config: RunConfig) -> Path:
    """The spin-3/2 fixtures exported as JSON files."""
    out = tmp_path / "spin32"
    fixtures_command.run(config=config, out_dir=out)
    return out


def write_json(path: Path, payload) -> Path:
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path
