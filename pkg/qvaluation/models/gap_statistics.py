from typing import Any, Dict, Type, TypeVar, Union

from attrs import define

from ..types import UNSET, Unset
from .run_config import RunConfig

T = TypeVar("T", bound="GapStatistics")


@define
class GapStatistics:
    """Tally of membership outcomes for random states against one projector.

    Attributes:
        dimension (int): Ambient dimension n.
        projector_rank (int): Rank r of the fixed random projector.
        trials (int): Number of states drawn.
        in_range (int): States valued true.
        in_kernel (int): States valued false.
        gap (int): States in neither range nor kernel.
        seed (int): Master seed of the run.
        config (Union[Unset, RunConfig]): Settings of the run.
    """

    dimension: int
    projector_rank: int
    trials: int
    in_range: int
    in_kernel: int
    gap: int
    seed: int
    config: Union[Unset, RunConfig] = UNSET

    def __attrs_post_init__(self) -> None:
        total = self.in_range + self.in_kernel + self.gap
        if total != self.trials:
            raise ValueError(f"counts sum to {total}, expected {self.trials} trials")

    @property
    def gap_fraction(self) -> float:
        return self.gap / self.trials if self.trials else 0.0

    @property
    def dispersion_free(self) -> bool:
        """True when every trial received a bivalent value."""
        return self.gap == 0

    def to_dict(self) -> Dict[str, Any]:
        field_dict: Dict[str, Any] = {
            "dimension": self.dimension,
            "projector_rank": self.projector_rank,
            "trials": self.trials,
            "counts": {
                "in_range": self.in_range,
                "in_kernel": self.in_kernel,
                "gap": self.gap,
            },
            "gap_fraction": self.gap_fraction,
            "seed": self.seed,
        }
        if not isinstance(self.config, Unset):
            field_dict["config"] = self.config.to_dict()

        return field_dict

    def to_row(self) -> Dict[str, Any]:
        """Flat row for tables and CSV sweeps."""
        return {
            "dimension": self.dimension,
            "rank": self.projector_rank,
            "trials": self.trials,
            "in_range": self.in_range,
            "in_kernel": self.in_kernel,
            "gap": self.gap,
            "gap_fraction": self.gap_fraction,
        }

    @classmethod
    def from_dict(cls: Type[T], src_dict: Dict[str, Any]) -> T:
        d = src_dict.copy()
        counts = d.pop("counts")
        d.pop("gap_fraction", None)

        _config = d.pop("config", UNSET)
        config: Union[Unset, RunConfig]
        if isinstance(_config, Unset):
            config = UNSET
        else:
            config = RunConfig.from_dict(_config)

        return cls(
            dimension=d.pop("dimension"),
            projector_rank=d.pop("projector_rank"),
            trials=d.pop("trials"),
            in_range=counts["in_range"],
            in_kernel=counts["in_kernel"],
            gap=counts["gap"],
            seed=d.pop("seed"),
            config=config,
        )
