"""Builds the argument parser for the verify, sweep and export commands"""

import argparse

from data_types import FamilyName
from exceptions import PreconditionFailed
from finite_fields import FieldSpec, make_field, parse_field, with_primitive
from settings import Budget

FAMILY_CHOICES = [name.value for name in FamilyName]


def _add_field_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("field")
    group.add_argument("--field", help="Field in p^n:c0,...,cn form, e.g. 3^2:1,0,1")
    group.add_argument("--p", type=int, help="Characteristic")
    group.add_argument("--n", type=int, default=1, help="Extension degree")
    group.add_argument(
        "--modulus", help="Monic modulus coefficients c0,...,cn, constant first"
    )


def _add_shared_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--theta-rank",
        type=int,
        default=0,
        help="Use the N-th primitive element in encoding order",
    )
    parser.add_argument(
        "--stab-only", action="store_true", help="Skip the orbit and triple count"
    )
    parser.add_argument("--format", choices=["text", "rows"], default="text")
    parser.add_argument("--out", help="Write the output to this file")
    parser.add_argument(
        "--timings", action="store_true", help="Include elapsed seconds per row"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="designs",
        description="Build and verify 3-designs from PGL(2,q) orbits of "
        "power-residue blocks.",
    )
    parser.add_argument("--verbose", action="store_true", help="Log at INFO level")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Run the pipeline for one case")
    _add_field_arguments(verify)
    verify.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    verify.add_argument("--r", type=int, required=True, help="Residue index")
    _add_shared_arguments(verify)

    sweep = commands.add_parser("sweep", help="Run every case up to a field order")
    sweep.add_argument("--max-q", type=int, required=True)
    sweep.add_argument(
        "--family", choices=[*FAMILY_CHOICES, "all"], default="all"
    )
    sweep.add_argument("--jobs", type=int, default=1, help="Worker processes")
    _add_shared_arguments(sweep)

    export = commands.add_parser("export", help="Write the design file of one case")
    _add_field_arguments(export)
    export.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    export.add_argument("--r", type=int, required=True, help="Residue index")
    _add_shared_arguments(export)

    return parser


def field_from_args(args: argparse.Namespace, budget: Budget) -> FieldSpec:
    """Builds the field named by --field or by --p, --n and --modulus.

    Raises:
        PreconditionFailed: If neither --field nor --p is given.
        ValueError: If --field or --modulus is malformed.
    """

    if args.field:
        spec = parse_field(args.field, budget)
    elif args.p is not None:
        modulus = None
        if args.modulus:
            modulus = [int(part) for part in args.modulus.split(",")]
        spec = make_field(args.p, args.n, modulus, budget)
    else:
        raise PreconditionFailed("field", "pass --field or --p")

    if args.theta_rank:
        primitives = spec.primitive_element_codes()
        spec = with_primitive(spec, primitives[args.theta_rank % len(primitives)])
    return spec
