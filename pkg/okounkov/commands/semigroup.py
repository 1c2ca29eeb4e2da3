"""semigroup: finite-level bodies from graded valuation data."""
import argparse

from okounkov.schemas_pkg.jobs import JobConfig, JobMode

from ._common import add_input_flag, add_output_flags

NAME = JobMode.SEMIGROUP.value
HELP = "approximate bodies from graded valuation data"


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help=HELP)
    add_input_flag(parser)
    add_output_flags(parser)
    parser.add_argument("--k-max", type=int, default=None, help="highest level to read")
    return parser


def build_config(args: argparse.Namespace) -> JobConfig:
    return JobConfig(
        mode=JobMode.SEMIGROUP,
        input_path=args.input,
        output_dir=args.out,
        k_max=args.k_max,
        emit_svg=args.svg,
    )
