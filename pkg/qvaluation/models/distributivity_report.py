from typing import Any, Dict, Type, TypeVar

from attrs import define

from ..types import TruthValue

T = TypeVar("T", bound="DistributivityReport")


@define(frozen=True)
class DistributivityReport:
    """Both sides of ``Q & (P | !P) = (Q & P) | (Q & !P)`` evaluated in one state.

    Attributes:
        lhs_value (TruthValue): Value of ``Q & (P | !P)``.
        rhs_value (TruthValue): Value of ``(Q & P) | (Q & !P)``.
        lhs_subspace_dim (int): Dimension of the subspace representing the left side.
        rhs_subspace_dim (int): Dimension of the subspace representing the right side.
    """

    lhs_value: TruthValue
    rhs_value: TruthValue
    lhs_subspace_dim: int
    rhs_subspace_dim: int

    @property
    def holds(self) -> bool:
        return self.lhs_value == self.rhs_value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lhs_value": self.lhs_value.value,
            "rhs_value": self.rhs_value.value,
            "lhs_subspace_dim": self.lhs_subspace_dim,
            "rhs_subspace_dim": self.rhs_subspace_dim,
            "holds": self.holds,
        }

    @classmethod
    def from_dict(cls: Type[T], src_dict: Dict[str, Any]) -> T:
        d = src_dict.copy()
        return cls(
            lhs_value=TruthValue(d.pop("lhs_value")),
            rhs_value=TruthValue(d.pop("rhs_value")),
            lhs_subspace_dim=d.pop("lhs_subspace_dim"),
            rhs_subspace_dim=d.pop("rhs_subspace_dim"),
        )
