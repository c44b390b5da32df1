"""
Randomized demonstrations of partial valuation.

A rank-r projector with 0 < r < n leaves both membership systems
``R X = psi`` and ``K X = psi`` overdetermined, so almost every state lies
in neither the range nor the kernel. This module draws Haar-random states
and projectors, tallies how often supervaluation assigns a gap, and
searches for explicit gap witnesses.

Every draw is reproducible from a master seed. Per-trial generators are
spawned from ``numpy.random.SeedSequence(seed)``, so serial and threaded
runs produce the same tallies.
"""

import csv
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterable, List, NamedTuple, Sequence, Union

import numpy as np
import scipy.linalg

from .clinalg import ComplexMatrix, least_squares_solve, rank
from .errors import InvalidRankError, InvalidStateError, WitnessSearchError
from .models.biconditional_report import BiconditionalReport
from .models.gap_statistics import GapStatistics
from .models.overdetermination_report import OverdeterminationReport
from .spin import spin32_fixtures
from .subspace import Projector, contains, kernel_of, range_of
from .types import DEFAULT_TOLERANCE, Membership, MembershipMethod, Tolerance
from .valuation import MembershipOutcome, StateVector, linear_systems, membership

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.SeedSequence]

DEFAULT_MAX_ATTEMPTS = 16


class GapWitness(NamedTuple):
    """A state and a proposition it leaves without a truth value."""

    state: StateVector
    projector: Projector
    outcome: MembershipOutcome


def _generator(seed: SeedLike) -> np.random.Generator:
    return np.random.default_rng(seed)


def _complex_gaussian(rng: np.random.Generator, shape: Sequence[int]) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def haar_state(n: int, seed: SeedLike) -> StateVector:
    """A unit vector drawn uniformly from the sphere of C^n.

    Raises:
        InvalidStateError: If ``n < 1``.
    """
    if n < 1:
        raise InvalidStateError(f"State dimension must be at least 1, got {n}")
    vector = _complex_gaussian(_generator(seed), (n, 1))
    return StateVector.normalized(vector)


def random_projector(n: int, r: int, seed: SeedLike, tol: Tolerance = DEFAULT_TOLERANCE) -> Projector:
    """Projector onto the span of ``r`` Haar-random vectors in C^n.

    Raises:
        InvalidRankError: If ``r`` is not in ``[1, n - 1]``.
    """
    if not 1 <= r <= n - 1:
        raise InvalidRankError(rank=r, dimension=n)
    gaussian = _complex_gaussian(_generator(seed), (n, r))
    q, _ = scipy.linalg.qr(gaussian, mode="economic")
    matrix = q @ q.conj().T
    return Projector(ComplexMatrix((matrix + matrix.conj().T) / 2.0), label=f"R{r}", tolerance=tol)


def overdetermination_report(p: Projector, tol: Tolerance = DEFAULT_TOLERANCE) -> OverdeterminationReport:
    """Unknown counts of the two membership systems against their ``n`` equations."""
    return OverdeterminationReport(
        n=p.dim_ambient,
        m=rank(p.matrix, tol),
        k=rank(p.complement().matrix, tol),
    )


def check_biconditionals(
    psi: StateVector,
    p: Projector,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> BiconditionalReport:
    """Compare subspace containment with solvability of ``R X = psi`` and ``K X = psi``."""
    r, k = linear_systems(p, tol)
    norm = psi.vector.norm()
    return BiconditionalReport(
        in_range=contains(range_of(p, tol), psi.vector, tol),
        range_solvable=least_squares_solve(r, psi.vector, tol).is_solution(norm, tol),
        in_kernel=contains(kernel_of(p, tol), psi.vector, tol),
        kernel_solvable=least_squares_solve(k, psi.vector, tol).is_solution(norm, tol),
    )


def _tally(
    p: Projector,
    n: int,
    seeds: Sequence[np.random.SeedSequence],
    tol: Tolerance,
) -> Counter:
    counts: Counter = Counter()
    for seed in seeds:
        psi = haar_state(n, seed)
        counts[membership(psi, p, MembershipMethod.RESIDUAL, tol).membership] += 1
    return counts


def _chunks(items: Sequence[np.random.SeedSequence], parts: int) -> List[Sequence[np.random.SeedSequence]]:
    size = -(-len(items) // parts)
    return [items[i : i + size] for i in range(0, len(items), size)]


def gap_frequency(
    n: int,
    r: int,
    trials: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> GapStatistics:
    """Valuate ``trials`` Haar states against one random rank-``r`` projector.

    Trial ``i`` draws its state from the ``i``-th child of
    ``SeedSequence(seed)``, so the tally does not depend on ``workers``.

    Raises:
        InvalidRankError: If ``r`` is not in ``[1, n - 1]``.
        ValueError: If ``trials`` is negative or ``workers`` is below 1.
    """
    if trials < 0:
        raise ValueError(f"trials must be non-negative, got {trials}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")

    p = random_projector(n, r, seed, tol)
    seeds = np.random.SeedSequence(seed).spawn(trials)

    counts: Counter = Counter()
    if trials and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(lambda chunk: _tally(p, n, chunk, tol), _chunks(seeds, workers)):
                counts.update(partial)
    elif trials:
        counts = _tally(p, n, seeds, tol)

    stats = GapStatistics(
        dimension=n,
        projector_rank=r,
        trials=trials,
        in_range=counts[Membership.IN_RANGE],
        in_kernel=counts[Membership.IN_KERNEL],
        gap=counts[Membership.NEITHER],
        seed=seed,
    )
    logger.info(
        "gap frequency n=%d r=%d: %d/%d gaps (seed %d, %d workers)",
        n,
        r,
        stats.gap,
        trials,
        seed,
        workers,
    )
    return stats


def gap_sweep(
    dimensions: Iterable[int],
    r: int,
    trials: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    workers: int = 1,
) -> List[GapStatistics]:
    """``gap_frequency`` for each dimension in turn, all with the same seed."""
    return [gap_frequency(n, r, trials, seed, tol, workers) for n in dimensions]


SWEEP_COLUMNS = ("dimension", "rank", "trials", "in_range", "in_kernel", "gap", "gap_fraction")


def write_sweep_csv(stats: Iterable[GapStatistics], path: Union[str, Path]) -> Path:
    """Write one CSV row per sweep point and return the path written."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=SWEEP_COLUMNS)
        writer.writeheader()
        for row in stats:
            writer.writerow(row.to_row())
    logger.info("wrote sweep to %s", path)
    return path


def find_gap_witness(
    n: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOLERANCE,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    use_fixture: bool = False,
) -> GapWitness:
    """A state and a rank-1 projector whose valuation is a gap.

    With ``use_fixture`` and ``n == 4`` the spin-3/2 pair ``(|X+3/2>, Y+3/2)``
    is returned without sampling.

    Raises:
        InvalidRankError: If ``n < 2``.
        WitnessSearchError: If ``max_attempts`` draws all land in a range or kernel.
    """
    if use_fixture and n == 4:
        fixtures = spin32_fixtures()
        outcome = membership(fixtures.ket_X32, fixtures.projector_Y32, MembershipMethod.RESIDUAL, tol)
        if outcome.membership is Membership.NEITHER:
            return GapWitness(fixtures.ket_X32, fixtures.projector_Y32, outcome)

    for attempt, child in enumerate(np.random.SeedSequence(seed).spawn(max_attempts), start=1):
        projector_seed, state_seed = child.spawn(2)
        p = random_projector(n, 1, projector_seed, tol)
        psi = haar_state(n, state_seed)
        outcome = membership(psi, p, MembershipMethod.RESIDUAL, tol)
        logger.debug("witness attempt %d in C^%d: %s", attempt, n, outcome.membership.value)
        if outcome.membership is Membership.NEITHER:
            return GapWitness(psi, p, outcome)
    raise WitnessSearchError(attempts=max_attempts)


__all__ = [
    "GapStatistics",
    "GapWitness",
    "SWEEP_COLUMNS",
    "check_biconditionals",
    "find_gap_witness",
    "gap_frequency",
    "gap_sweep",
    "haar_state",
    "overdetermination_report",
    "random_projector",
    "write_sweep_csv",
]
