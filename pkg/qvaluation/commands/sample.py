from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from ..errors import InvalidRankError
from ..models.gap_statistics import GapStatistics
from ..models.run_config import RunConfig
from ..render import render, render_rows
from ..sampling import gap_sweep, write_sweep_csv
from ..types import CommandResult


def _check_ranks(*, dimensions: Sequence[int], rank: int) -> None:
    for n in dimensions:
        if not 1 <= rank <= n - 1:
            raise InvalidRankError(rank=rank, dimension=n)


def _build_payload(*, stats: List[GapStatistics], config: RunConfig) -> Dict[str, Any]:
    if len(stats) == 1:
        return stats[0].to_dict()
    return {
        "sweep": [entry.to_dict() for entry in stats],
        "config": config.to_dict(),
    }


def _build_result(*, stats: List[GapStatistics], config: RunConfig) -> CommandResult[List[GapStatistics]]:
    payload = _build_payload(stats=stats, config=config)
    if len(stats) == 1:
        content = render(payload, config.output_format)
    else:
        content = render_rows(payload, [entry.to_row() for entry in stats], config.output_format)
    return CommandResult(exit_code=0, parsed=stats, content=content)


def run_detailed(
    *,
    config: RunConfig,
    dimensions: Sequence[int],
    rank: int,
    trials: int,
    csv_path: Optional[Union[str, Path]] = None,
) -> CommandResult[List[GapStatistics]]:
    """Tally gaps for Haar-random states against a random projector, per dimension

     Each dimension uses the master seed from ``config``, so a one-dimension
    run and the same dimension inside a sweep report identical counts.

    Args:
        config (RunConfig): Seed, tolerance, worker count and output format.
        dimensions (Sequence[int]): Ambient dimensions to sample.
        rank (int): Projector rank, in ``[1, n - 1]`` for every ``n``.
        trials (int): States drawn per dimension.
        csv_path (Optional[Union[str, Path]]): Also write the sweep as CSV.

    Raises:
        errors.InvalidRankError: If ``rank`` is trivial for any dimension.

    Returns:
        CommandResult[List[GapStatistics]]
    """

    _check_ranks(dimensions=dimensions, rank=rank)
    stats = gap_sweep(dimensions, rank, trials, config.seed, config.tolerance, config.workers)
    for entry in stats:
        entry.config = config
    if csv_path is not None:
        write_sweep_csv(stats, csv_path)
    return _build_result(stats=stats, config=config)


def run(
    *,
    config: RunConfig,
    dimensions: Sequence[int],
    rank: int,
    trials: int,
    csv_path: Optional[Union[str, Path]] = None,
) -> Optional[List[GapStatistics]]:
    """Tally gaps for Haar-random states against a random projector, per dimension

    Returns:
        List[GapStatistics]
    """

    return run_detailed(
        config=config,
        dimensions=dimensions,
        rank=rank,
        trials=trials,
        csv_path=csv_path,
    ).parsed
