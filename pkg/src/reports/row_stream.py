"""Renders dataclass rows as line delimited JSON with a stable key order"""

import json
from dataclasses import asdict
from typing import Any, Sequence

from data_types.protocols import IsDataclass

_VOLATILE_KEYS = ("elapsed",)


def row_to_dict(row: IsDataclass, timings: bool = False) -> dict[str, Any]:
    """Field values in declaration order, nested dicts sorted by key"""

    data = asdict(row)
    if not timings:
        for key in _VOLATILE_KEYS:
            data.pop(key, None)
    return {
        key: dict(sorted(value.items())) if isinstance(value, dict) else value
        for key, value in data.items()
    }


def render_row_stream(rows: Sequence[IsDataclass], timings: bool = False) -> str:
    """One JSON object per line.

    Args:
        rows (Sequence[IsDataclass]): Rows to render.
        timings (bool): Keep the elapsed field, which varies between runs.

    Returns:
        str: The stream with a trailing newline, or an empty string.
    """

    return "".join(
        json.dumps(row_to_dict(row, timings), separators=(", ", ": ")) + "\n"
        for row in rows
    )
