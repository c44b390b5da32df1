from typing import Any, Dict, Type, TypeVar

import attrs
from attrs import define, field

from ..types import DEFAULT_TOLERANCE, MembershipMethod, OutputFormat, Semantics, Tolerance

T = TypeVar("T", bound="RunConfig")


@define(frozen=True)
class RunConfig:
    """Settings for one CLI run, echoed into every report for reproducibility.

    Attributes:
        tolerance (Tolerance): Rank and residual cutoffs.
        seed (int): Master seed for every random draw.
        output_format (OutputFormat): ``json`` or ``table``.
        method (MembershipMethod): How membership is decided.
        semantics (Semantics): Supervaluation (``sv``) or total quantum logic (``ql``).
        workers (int): Threads used for sampling trials.
    """

    tolerance: Tolerance = DEFAULT_TOLERANCE
    seed: int = 0
    output_format: OutputFormat = field(default=OutputFormat.JSON, converter=OutputFormat)
    method: MembershipMethod = field(default=MembershipMethod.RESIDUAL, converter=MembershipMethod)
    semantics: Semantics = field(default=Semantics.SUPERVALUATION, converter=Semantics)
    workers: int = 1

    @classmethod
    def from_namespace(cls: Type[T], namespace: Any) -> T:
        """Build a config from parsed CLI flags, applying defaults for absent ones."""
        defaults = cls()
        rank_rel = getattr(namespace, "tol_rank", None)
        residual_rel = getattr(namespace, "tol_residual", None)
        tolerance = defaults.tolerance
        if rank_rel is not None:
            tolerance = tolerance.evolve(rank_rel=rank_rel)
        if residual_rel is not None:
            tolerance = tolerance.evolve(residual_rel=residual_rel)

        def pick(name: str, default: Any) -> Any:
            value = getattr(namespace, name, None)
            return default if value is None else value

        return cls(
            tolerance=tolerance,
            seed=pick("seed", defaults.seed),
            output_format=pick("format", defaults.output_format),
            method=pick("method", defaults.method),
            semantics=pick("semantics", defaults.semantics),
            workers=pick("workers", defaults.workers),
        )

    def evolve(self, **changes: Any) -> "RunConfig":
        return attrs.evolve(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tol_rank": self.tolerance.rank_rel,
            "tol_residual": self.tolerance.residual_rel,
            "seed": self.seed,
            "format": self.output_format.value,
            "method": self.method.value,
            "semantics": self.semantics.value,
            "workers": self.workers,
        }

    @classmethod
    def from_dict(cls: Type[T], src_dict: Dict[str, Any]) -> T:
        d = src_dict.copy()
        tolerance = Tolerance(
            rank_rel=d.pop("tol_rank", DEFAULT_TOLERANCE.rank_rel),
            residual_rel=d.pop("tol_residual", DEFAULT_TOLERANCE.residual_rel),
        )
        return cls(
            tolerance=tolerance,
            seed=d.pop("seed", 0),
            output_format=d.pop("format", OutputFormat.JSON),
            method=d.pop("method", MembershipMethod.RESIDUAL),
            semantics=d.pop("semantics", Semantics.SUPERVALUATION),
            workers=d.pop("workers", 1),
        )
