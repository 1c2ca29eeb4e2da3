"""surface: Zariski chambers and bodies on a blow-up of P^2."""
import argparse

from okounkov.schemas_pkg.jobs import JobConfig, JobMode

from ._common import add_input_flag, add_output_flags

NAME = JobMode.SURFACE.value
HELP = "bodies on the blow-up of P^2 at N points"


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help=HELP)
    add_input_flag(parser)
    add_output_flags(parser)
    parser.add_argument("--curves", default=None, help="'delpezzo' or a JSON file with curve classes")
    return parser


def build_config(args: argparse.Namespace) -> JobConfig:
    return JobConfig(
        mode=JobMode.SURFACE,
        input_path=args.input,
        output_dir=args.out,
        emit_svg=args.svg,
        curves=args.curves,
    )
