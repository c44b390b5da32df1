from typing import Any, Dict, Type, TypeVar, Union

from attrs import define

from ..types import UNSET, Semantics, TruthValue, Unset
from .run_config import RunConfig

T = TypeVar("T", bound="LogicReport")


@define
class LogicReport:
    """
    Attributes:
        formula (str): The formula in canonical text syntax.
        state (str): Label of the state vector.
        semantics (Semantics): Semantics of the membership predicate.
        truth (TruthValue): Value of the formula in the state.
        subspace_dim (int): Dimension of the subspace representing the formula.
        config (Union[Unset, RunConfig]): Settings of the run.
    """

    formula: str
    state: str
    semantics: Semantics
    truth: TruthValue
    subspace_dim: int
    config: Union[Unset, RunConfig] = UNSET

    def to_dict(self) -> Dict[str, Any]:
        config: Union[Unset, Dict[str, Any]] = UNSET
        if not isinstance(self.config, Unset):
            config = self.config.to_dict()

        field_dict: Dict[str, Any] = {
            "formula": self.formula,
            "state": self.state,
            "semantics": self.semantics.value.upper(),
            "truth": self.truth.value,
            "subspace_dim": self.subspace_dim,
        }
        if config is not UNSET:
            field_dict["config"] = config

        return field_dict

    @classmethod
    def from_dict(cls: Type[T], src_dict: Dict[str, Any]) -> T:
        d = src_dict.copy()
        _config = d.pop("config", UNSET)
        config: Union[Unset, RunConfig]
        if isinstance(_config, Unset):
            config = UNSET
        else:
            config = RunConfig.from_dict(_config)

        return cls(
            formula=d.pop("formula"),
            state=d.pop("state"),
            semantics=Semantics(d.pop("semantics").lower()),
            truth=TruthValue(d.pop("truth")),
            subspace_dim=d.pop("subspace_dim"),
            config=config,
        )
