"""Contains the verify, sweep and export command handlers.

Each handler returns the process exit code: 0 when every row passed and 1
on a mismatch. Domain errors propagate to the caller, which maps them to 2.
"""

import argparse
import sys
from typing import Optional

from commands.parser import field_from_args
from data_types import FamilyName
from designs import family_from_name
from exceptions import BudgetExceeded
from reports import (
    render_design_file,
    render_row_stream,
    render_summary,
    render_table,
    write_design_file,
)
from settings import Budget
from sweeps import SweepRow, run_case, run_sweep


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        write_design_file(out, text)
    else:
        sys.stdout.write(text)


def _render_checks(row: SweepRow) -> str:
    return "".join(
        f"{name}: {'ok' if passed else 'FAILED'}\n"
        for name, passed in sorted(row.checks.items())
    )


def cmd_verify(args: argparse.Namespace, budget: Budget) -> int:
    """Runs one case and prints its row and check results"""

    spec = field_from_args(args, budget)
    family = family_from_name(args.family, args.r)
    row = run_case(spec, family, budget, args.stab_only).row

    if args.format == "rows":
        text = render_row_stream([row], args.timings)
    else:
        text = render_table([row], args.timings) + _render_checks(row)
    _emit(text, args.out)
    return 0 if row.passed else 1


def cmd_sweep(args: argparse.Namespace, budget: Budget) -> int:
    """Runs every admissible case up to --max-q and prints a table or row stream.

    Raises:
        BudgetExceeded: If --max-q is past the field budget.
    """

    if args.family == "all":
        families = list(FamilyName)
    else:
        families = [FamilyName(args.family)]

    rows = run_sweep(
        args.max_q, families, args.jobs, budget, args.stab_only, args.theta_rank
    )

    if args.format == "rows":
        text = render_row_stream(rows, args.timings)
    else:
        text = render_table(rows, args.timings) + render_summary(rows)
    _emit(text, args.out)
    return 0 if all(row.passed for row in rows) else 1


def cmd_export(args: argparse.Namespace, budget: Budget) -> int:
    """Writes the design file of one case.

    Raises:
        BudgetExceeded: If q is past the full verification budget.
    """

    spec = field_from_args(args, budget)
    if spec.q > budget.verify_max_q:
        raise BudgetExceeded("verification q", spec.q, budget.verify_max_q)

    family = family_from_name(args.family, args.r)
    result = run_case(spec, family, budget)

    if args.format == "rows":
        text = render_row_stream([result.row], args.timings)
    else:
        text = render_design_file(spec, family, result)
    _emit(text, args.out)
    return 0 if result.row.passed else 1
