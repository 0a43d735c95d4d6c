"""
symcheck - command-line entry point.

Subcommands:
  verify   run verification suites and emit the report stream
  expand   print one polynomial or Kostka table
  show     print a Kostka or inverse-Kostka block as JSON

Logging goes to stderr; stdout carries only the requested output.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from symcheck.bases.classical import schur
from symcheck.bases.kostka import describe_block, inverse_kostka_block, kostka_block
from symcheck.combinat.partitions import PartitionError, PartitionSeq, parse_partition, render
from symcheck.config import (
    DEFAULT_FORMAT,
    DEFAULT_N_MAX,
    DEFAULT_SUITES,
    DEFAULT_WEIGHT_MAX,
    DEFAULT_WORKERS,
    DEFAULT_Y_DEGREE_MAX,
    LOG_FORMAT,
    SUITES,
)
from symcheck.models.schemas import BlockExport, ExpandResult, SuiteConfig
from symcheck.qfunctions.q_series import KINDS, q_r, schur_2reduced, schur_q
from symcheck.runner.executor import run_verify

# Configure logging
logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr)
logger = logging.getLogger(__name__)

EXPAND_OBJECTS = ("schur", "schur2r", "qfn", "kostka", "invkostka")
TABLE_OBJECTS = ("kostka", "invkostka")


def partition_literal(text: str) -> PartitionSeq:
    """argparse type for [a,b,...] literals."""
    try:
        return parse_partition(text)
    except PartitionError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symcheck", description="Exact symmetric-function identity checks")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", action="append", help=f"suite(s), repeatable or comma-separated: {', '.join(SUITES)}")
    verify.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    verify.add_argument("--weight-max", type=int, default=DEFAULT_WEIGHT_MAX)
    verify.add_argument("--y-degree-max", type=int, default=DEFAULT_Y_DEGREE_MAX)
    verify.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    verify.add_argument("--format", choices=("json", "text"), default=DEFAULT_FORMAT)
    verify.add_argument("--timings", action="store_true", help="include elapsed_ms and wall_ms")
    verify.add_argument("--quiet", action="store_true", help="log warnings and errors only")

    expand = commands.add_parser("expand", help="print a polynomial or table")
    expand.add_argument("object", choices=EXPAND_OBJECTS)
    expand.add_argument("--lambda", dest="lam", type=partition_literal)
    expand.add_argument("--r", type=int)
    expand.add_argument("--n", type=int, required=True)
    expand.add_argument("--weight", type=int)
    expand.add_argument("--kind", choices=KINDS[:2], default="single")
    expand.add_argument("--format", choices=("text", "json"), default="text")

    show = commands.add_parser("show", help="print a Kostka block as JSON")
    show.add_argument("object", choices=TABLE_OBJECTS)
    show.add_argument("--weight", type=int, required=True)
    show.add_argument("--n", type=int, required=True)
    return parser


def split_suites(values: Optional[List[str]]) -> List[str]:
    if not values:
        return list(DEFAULT_SUITES)
    return [name.strip() for value in values for name in value.split(",") if name.strip()]


def command_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.quiet:
        logging.getLogger().setLevel(logging.WARNING)
    try:
        config = SuiteConfig(
            suites=split_suites(args.suite),
            n_max=args.n_max,
            weight_max=args.weight_max,
            y_degree_max=args.y_degree_max,
            workers=args.workers,
            format=args.format,
            timings=args.timings,
        )
    except ValidationError as e:
        parser.error(f"invalid verify options: {e.errors()[0]['msg']}")
    logger.info(f"Running suites {config.suites} with n_max={config.n_max} weight_max={config.weight_max}")
    exit_code, _ = run_verify(config)
    return exit_code


def _table(obj: str, weight: int, n: int):
    if weight < 0 or n < 1:
        raise ValueError(f"need weight >= 0 and n >= 1, got weight={weight} n={n}")
    return kostka_block(weight, n) if obj == "kostka" else inverse_kostka_block(weight, n)


def command_expand(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.n < 1:
        parser.error(f"--n must be positive, got {args.n}")
    try:
        if args.object in TABLE_OBJECTS:
            if args.weight is None:
                parser.error(f"expand {args.object} needs --weight")
            table = _table(args.object, args.weight, args.n)
            if args.format == "json":
                print(BlockExport(**describe_block(table)).model_dump_json())
            else:
                print("index: " + " ".join(render(p) for p in table.index))
                print(table.render_rows())
            return 0

        params = {"n": str(args.n)}
        if args.object == "qfn" and args.r is not None:
            value = q_r(args.r, args.n, args.kind)
            params.update(r=str(args.r), kind=args.kind)
        else:
            if args.lam is None:
                parser.error(f"expand {args.object} needs --lambda")
            params["lambda"] = render(args.lam)
            if args.object == "schur":
                value = schur(args.lam, args.n)
            elif args.object == "schur2r":
                value = schur_2reduced(args.lam, args.n, args.kind)
                params["kind"] = args.kind
            else:
                value = schur_q(args.lam, args.n, args.kind)
                params["kind"] = args.kind
    except ValueError as e:
        parser.error(str(e))
    if args.format == "json":
        print(ExpandResult(object=args.object, params=params, value=str(value)).model_dump_json())
    else:
        print(value)
    return 0


def command_show(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        table = _table(args.object, args.weight, args.n)
    except ValueError as e:
        parser.error(str(e))
    print(BlockExport(**describe_block(table)).model_dump_json(indent=2))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return command_verify(parser, args)
    if args.command == "expand":
        return command_expand(parser, args)
    return command_show(parser, args)


if __name__ == "__main__":
    sys.exit(main())
