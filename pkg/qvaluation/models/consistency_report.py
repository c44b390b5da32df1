from typing import Any, Dict, Type, TypeVar

from attrs import define

from ..types import Semantics, TruthValue

T = TypeVar("T", bound="ConsistencyReport")


@define(frozen=True)
class ConsistencyReport:
    """Agreement between a truth value and the probability of the same proposition.

    Attributes:
        truth (TruthValue): Value assigned by the valuation.
        probability (float): Born probability ``<psi|P|psi>``.
        complement_probability (float): Born probability of the negation, ``<psi|I-P|psi>``.
        consistent (bool): Whether the pair satisfies the truth/probability constraints.
        semantics (Semantics): Semantics the truth value was computed under.
    """

    truth: TruthValue
    probability: float
    complement_probability: float
    consistent: bool
    semantics: Semantics = Semantics.SUPERVALUATION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "truth": self.truth.value,
            "probability": self.probability,
            "complement_probability": self.complement_probability,
            "consistent": self.consistent,
            "semantics": self.semantics.value.upper(),
        }

    @classmethod
    def from_dict(cls: Type[T], src_dict: Dict[str, Any]) -> T:
        d = src_dict.copy()
        return cls(
            truth=TruthValue(d.pop("truth")),
            probability=d.pop("probability"),
            complement_probability=d.pop("complement_probability"),
            consistent=d.pop("consistent"),
            semantics=Semantics(d.pop("semantics", "sv").lower()),
        )
