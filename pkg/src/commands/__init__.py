"""Exports the command line entry point and handlers to make them easier to import"""

import logging
import sys
from typing import Optional, Sequence

from commands.handlers import cmd_export, cmd_sweep, cmd_verify
from commands.parser import build_parser, field_from_args
from exceptions import DesignError
from settings import Budget

HANDLERS = {
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "export": cmd_export,
}


def configure_logging(level: str, verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.INFO if verbose and level != "DEBUG" else level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parses arguments and runs the selected command.

    Returns:
        int: 0 when every row passed, 1 on a mismatch, 2 on a usage or
            domain error.
    """

    args = build_parser().parse_args(argv)

    try:
        budget = Budget.from_env()
        configure_logging(budget.log_level, args.verbose)
        return HANDLERS[args.command](args, budget)
    except (DesignError, ValueError) as error:
        print(f"[error] {error}", file=sys.stderr)
        return 2
