from typing import Any, Dict, Type, TypeVar

from attrs import define

T = TypeVar("T", bound="OverdeterminationReport")


@define(frozen=True)
class OverdeterminationReport:
    """Shape of the two membership systems ``R X = psi`` and ``K X = psi``.

    Attributes:
        n (int): Ambient dimension, the number of equations in each system.
        m (int): Independent columns of ``P``, the unknowns of ``R X = psi``.
        k (int): Independent columns of ``I - P``, the unknowns of ``K X = psi``.
    """

    n: int
    m: int
    k: int

    @property
    def overdetermined_range(self) -> bool:
        return self.m < self.n

    @property
    def overdetermined_kernel(self) -> bool:
        return self.k < self.n

    @property
    def rank_nullity_holds(self) -> bool:
        return self.m + self.k == self.n

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "overdetermined_R": self.overdetermined_range,
            "overdetermined_K": self.overdetermined_kernel,
        }

    @classmethod
    def from_dict(cls: Type[T], src_dict: Dict[str, Any]) -> T:
        return cls(n=src_dict["n"], m=src_dict["m"], k=src_dict["k"])
