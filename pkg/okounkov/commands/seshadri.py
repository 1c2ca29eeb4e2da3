"""seshadri: simplex fit over the bodies of a toric or surface input."""
import argparse

from okounkov.schemas_pkg.jobs import JobConfig, JobMode

from ._common import add_input_flag, add_output_flags, parse_indices

NAME = JobMode.SESHADRI.value
HELP = "largest simplex inside every body"


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help=HELP)
    add_input_flag(parser, "--from")
    add_output_flags(parser)
    parser.add_argument("--points", type=parse_indices, default=None, help="chosen vertex indices for toric input")
    return parser


def build_config(args: argparse.Namespace) -> JobConfig:
    return JobConfig(
        mode=JobMode.SESHADRI,
        input_path=args.input,
        output_dir=args.out,
        emit_svg=args.svg,
        points=args.points,
    )
