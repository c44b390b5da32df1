from typing import Any, Dict, List, Union

from attrs import define, field

from ..types import UNSET, Unset
from .run_config import RunConfig


@define(frozen=True)
class Check:
    """One named self-check of a walkthrough.

    Attributes:
        name (str): What is being checked.
        passed (bool): Whether the computed value matched.
        expected (Any): Expected value, JSON-ready.
        actual (Any): Computed value, JSON-ready.
    """

    name: str
    passed: bool
    expected: Any
    actual: Any

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
        }


@define
class WalkthroughReport:
    """Sections of computed results plus the checks run against them."""

    sections: Dict[str, Any] = field(factory=dict)
    checks: List[Check] = field(factory=list)
    config: Union[Unset, RunConfig] = UNSET

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def add_check(self, name: str, passed: bool, expected: Any, actual: Any) -> bool:
        self.checks.append(Check(name=name, passed=bool(passed), expected=expected, actual=actual))
        return bool(passed)

    def to_dict(self) -> Dict[str, Any]:
        field_dict: Dict[str, Any] = {
            "passed": self.passed,
            "sections": self.sections,
            "checks": [check.to_dict() for check in self.checks],
        }
        if not isinstance(self.config, Unset):
            field_dict["config"] = self.config.to_dict()

        return field_dict
