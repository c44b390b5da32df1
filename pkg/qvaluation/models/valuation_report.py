from typing import Any, Dict, List, Type, TypeVar, Union

from attrs import define, field

from ..types import UNSET, MembershipMethod, Semantics, TruthValue, Unset
from .run_config import RunConfig

T = TypeVar("T", bound="ValuationReport")


@define
class ValuationReport:
    """The truth value a state assigns to a proposition, with its evidence.

    Attributes:
        state (str): Label of the state vector.
        proposition (str): Label of the projector.
        semantics (Semantics): Semantics the value was computed under.
        truth (TruthValue): The assigned value.
        probability (float): Born probability of the proposition in the state.
        residual_range (float): Residual of the range membership test.
        residual_kernel (float): Residual of the kernel membership test.
        method (Union[Unset, MembershipMethod]): Membership method used.
        config (Union[Unset, RunConfig]): Settings of the run that produced the report.
    """

    state: str
    proposition: str
    semantics: Semantics
    truth: TruthValue
    probability: float
    residual_range: float
    residual_kernel: float
    method: Union[Unset, MembershipMethod] = UNSET
    config: Union[Unset, RunConfig] = UNSET
    additional_properties: Dict[str, Any] = field(init=False, factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        semantics = self.semantics.value.upper()
        truth = self.truth.value

        method: Union[Unset, str] = UNSET
        if not isinstance(self.method, Unset):
            method = self.method.value

        config: Union[Unset, Dict[str, Any]] = UNSET
        if not isinstance(self.config, Unset):
            config = self.config.to_dict()

        field_dict: Dict[str, Any] = {}
        field_dict.update(self.additional_properties)
        field_dict.update(
            {
                "state": self.state,
                "proposition": self.proposition,
                "semantics": semantics,
                "truth": truth,
                "probability": self.probability,
                "residual_range": self.residual_range,
                "residual_kernel": self.residual_kernel,
            }
        )
        if method is not UNSET:
            field_dict["method"] = method
        if config is not UNSET:
            field_dict["config"] = config

        return field_dict

    @classmethod
    def from_dict(cls: Type[T], src_dict: Dict[str, Any]) -> T:
        d = src_dict.copy()
        state = d.pop("state")

        proposition = d.pop("proposition")

        semantics = Semantics(d.pop("semantics").lower())

        truth = TruthValue(d.pop("truth"))

        probability = d.pop("probability")

        residual_range = d.pop("residual_range")

        residual_kernel = d.pop("residual_kernel")

        _method = d.pop("method", UNSET)
        method: Union[Unset, MembershipMethod]
        if isinstance(_method, Unset):
            method = UNSET
        else:
            method = MembershipMethod(_method)

        _config = d.pop("config", UNSET)
        config: Union[Unset, RunConfig]
        if isinstance(_config, Unset):
            config = UNSET
        else:
            config = RunConfig.from_dict(_config)

        valuation_report = cls(
            state=state,
            proposition=proposition,
            semantics=semantics,
            truth=truth,
            probability=probability,
            residual_range=residual_range,
            residual_kernel=residual_kernel,
            method=method,
            config=config,
        )

        valuation_report.additional_properties = d
        return valuation_report

    @property
    def additional_keys(self) -> List[str]:
        return list(self.additional_properties.keys())

    def __getitem__(self, key: str) -> Any:
        return self.additional_properties[key]

    def __setitem__(self, key: str, value: Any) -> None:
        self.additional_properties[key] = value

    def __delitem__(self, key: str) -> None:
        del self.additional_properties[key]

    def __contains__(self, key: str) -> bool:
        return key in self.additional_properties
