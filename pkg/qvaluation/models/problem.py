from typing import Any, Dict, List, Type, TypeVar, Union

import attrs
from attrs import define

from ..errors import QValuationError
from ..types import UNSET, Unset

T = TypeVar("T", bound="Problem")


@define
class Problem:
    """A problem document describing why a command failed, after RFC 7807.

    Attributes:
        type (str): Stable error type, e.g. ``payload_error``.
        title (str): Short human-readable summary.
        exit_code (int): The process exit code that accompanies the document.
        detail (Union[Unset, str]): Explanation specific to this occurrence.
        field (Union[Unset, str]): The offending input field, when one is known.
    """

    type: str
    title: str
    exit_code: int
    detail: Union[Unset, str] = UNSET
    field: Union[Unset, str] = UNSET
    additional_properties: Dict[str, Any] = attrs.field(init=False, factory=dict)

    @classmethod
    def from_error(cls: Type[T], error: QValuationError) -> T:
        return cls(
            type=error.type,
            title=error.message,
            exit_code=error.exit_code,
            detail=UNSET if error.detail is None else error.detail,
            field=UNSET if error.field is None else error.field,
        )

    def to_dict(self) -> Dict[str, Any]:
        field_dict: Dict[str, Any] = {}
        field_dict.update(self.additional_properties)
        field_dict.update(
            {
                "type": self.type,
                "title": self.title,
                "exit_code": self.exit_code,
            }
        )
        if self.detail is not UNSET:
            field_dict["detail"] = self.detail
        if self.field is not UNSET:
            field_dict["field"] = self.field

        return field_dict

    @classmethod
    def from_dict(cls: Type[T], src_dict: Dict[str, Any]) -> T:
        d = src_dict.copy()
        type = d.pop("type")

        title = d.pop("title")

        exit_code = d.pop("exit_code", 2)

        detail = d.pop("detail", UNSET)

        field = d.pop("field", UNSET)

        problem = cls(
            type=type,
            title=title,
            exit_code=exit_code,
            detail=detail,
            field=field,
        )

        problem.additional_properties = d
        return problem

    @property
    def additional_keys(self) -> List[str]:
        return list(self.additional_properties.keys())

    def __getitem__(self, key: str) -> Any:
        return self.additional_properties[key]

    def __setitem__(self, key: str, value: Any) -> None:
        self.additional_properties[key] = value

    def __contains__(self, key: str) -> bool:
        return key in self.additional_properties
