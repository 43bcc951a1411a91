"""Renders sweep rows as an aligned text table and a per case summary"""

from collections import Counter
from typing import Sequence

from sweeps import SweepRow

_COLUMNS = [
    ("q", "q"),
    ("family", "family"),
    ("r", "r"),
    ("k", "k"),
    ("b", "blocksize"),
    ("orbit", "orbit_size"),
    ("|G_B|", "stab_order"),
    ("type", "stab_type"),
    ("predicted", "predicted_type"),
    ("lam_count", "lambda_counted"),
    ("lam_formula", "lambda_formula"),
    ("lam_pred", "lambda_predicted"),
    ("status", "status"),
]


def _cell(value: object) -> str:
    return "-" if value is None else str(value)


def render_table(rows: Sequence[SweepRow], timings: bool = False) -> str:
    """Aligned table, one line per row, numbers right aligned.

    Args:
        rows (Sequence[SweepRow]): Rows in display order.
        timings (bool): Add an elapsed seconds column.

    Returns:
        str: The table with a trailing newline, or an empty string.
    """

    if not rows:
        return ""

    headers = [header for header, _ in _COLUMNS]
    body = [[_cell(getattr(row, name)) for _, name in _COLUMNS] for row in rows]
    if timings:
        headers.append("elapsed")
        for line, row in zip(body, rows):
            line.append(f"{row.elapsed:.3f}")

    widths = [
        max(len(line[i]) for line in [headers, *body]) for i in range(len(headers))
    ]
    text_columns = {"family", "type", "predicted", "status"}

    def render(line: list[str]) -> str:
        cells = [
            cell.ljust(width) if header in text_columns else cell.rjust(width)
            for cell, width, header in zip(line, widths, headers)
        ]
        return "  ".join(cells).rstrip()

    return "\n".join(render(line) for line in [headers, *body]) + "\n"


def render_summary(rows: Sequence[SweepRow]) -> str:
    """Row counts per family and theorem case, with mismatch and skip totals"""

    per_case = Counter(
        (row.family, row.case) for row in rows if row.status != "skipped"
    )
    lines = [
        f"{family} {case}: {count}"
        for (family, case), count in sorted(per_case.items())
    ]

    statuses = Counter(row.status for row in rows)
    lines.append(
        f"rows: {len(rows)}  ok: {statuses['ok']}  mismatch: {statuses['mismatch']}"
        f"  skipped: {statuses['skipped']}"
    )
    return "\n".join(lines) + "\n"
