"""
Output rendering for command reports: deterministic JSON and aligned
plain-text tables.
"""

import json
from typing import Any, Dict, List, Mapping, Sequence, Tuple, Union

from .types import OutputFormat

Payload = Union[Mapping[str, Any], Sequence[Mapping[str, Any]]]


def dump_json(payload: Any) -> str:
    """JSON with ``indent=2`` and insertion-ordered keys, newline-terminated."""
    return json.dumps(payload, indent=2, allow_nan=False, ensure_ascii=False) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def _flatten(payload: Mapping[str, Any], prefix: str = "") -> List[Tuple[str, str]]:
    rows: List[Tuple[str, str]] = []
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, Mapping):
            rows.extend(_flatten(value, prefix=f"{name}."))
        elif isinstance(value, list) and value and all(isinstance(item, Mapping) for item in value):
            for index, item in enumerate(value):
                rows.extend(_flatten(item, prefix=f"{name}[{index}]."))
        else:
            rows.append((name, _cell(value)))
    return rows


def key_value_table(payload: Mapping[str, Any]) -> str:
    """Two aligned columns, nested keys joined with dots."""
    rows = _flatten(payload)
    if not rows:
        return ""
    width = max(len(key) for key, _ in rows)
    return "".join(f"{key.ljust(width)}  {value}\n" for key, value in rows)


def column_table(rows: Sequence[Mapping[str, Any]]) -> str:
    """One header line plus one line per row, columns right-aligned."""
    if not rows:
        return ""
    columns = list(rows[0].keys())
    cells = [[_cell(row.get(column)) for column in columns] for row in rows]
    widths = [max(len(column), *(len(line[i]) for line in cells)) for i, column in enumerate(columns)]
    lines = ["  ".join(column.rjust(width) for column, width in zip(columns, widths))]
    lines.extend("  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in cells)
    return "\n".join(lines) + "\n"


def render(payload: Payload, output_format: OutputFormat = OutputFormat.JSON) -> str:
    """Render a report dict, or a list of flat rows, in the requested format."""
    if OutputFormat(output_format) is OutputFormat.JSON:
        return dump_json(payload)
    if isinstance(payload, Mapping):
        return key_value_table(payload)
    return column_table(payload)


def render_rows(report: Dict[str, Any], rows: Sequence[Mapping[str, Any]], output_format: OutputFormat) -> str:
    """JSON renders ``report`` whole; the table format shows only ``rows``."""
    if OutputFormat(output_format) is OutputFormat.JSON:
        return dump_json(report)
    return column_table(rows)


__all__ = ["column_table", "dump_json", "key_value_table", "render", "render_rows"]
