from typing import Any, Dict

from attrs import define


@define(frozen=True)
class BiconditionalReport:
    """Membership decided geometrically versus by solvability of the linear systems.

    Attributes:
        in_range (bool): ``psi`` lies in ran(P) by the projection residual.
        range_solvable (bool): ``R X = psi`` has a solution.
        in_kernel (bool): ``psi`` lies in ker(P) by the projection residual.
        kernel_solvable (bool): ``K X = psi`` has a solution.
    """

    in_range: bool
    range_solvable: bool
    in_kernel: bool
    kernel_solvable: bool

    @property
    def holds(self) -> bool:
        return self.in_range == self.range_solvable and self.in_kernel == self.kernel_solvable

    @property
    def both_empty(self) -> bool:
        """Neither system is solvable: no bivalent value is forced."""
        return not self.range_solvable and not self.kernel_solvable

    def to_dict(self) -> Dict[str, Any]:
        return {
            "in_range": self.in_range,
            "range_solvable": self.range_solvable,
            "in_kernel": self.in_kernel,
            "kernel_solvable": self.kernel_solvable,
            "holds": self.holds,
        }
