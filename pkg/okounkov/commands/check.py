"""check: the acceptance suite over the built-in corpus."""
import argparse

from okounkov.schemas_pkg.jobs import JobConfig, JobMode

from ._common import add_output_flags

NAME = JobMode.CHECK.value
HELP = "run the named checks (all when none are given)"


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help=HELP)
    add_output_flags(parser)
    parser.add_argument("names", nargs="*", help="check names; see --list")
    parser.add_argument("--list", action="store_true", help="print the registered checks and exit")
    parser.add_argument("--k-max", type=int, default=None, help="top level for the oracle check")
    return parser


def build_config(args: argparse.Namespace) -> JobConfig:
    return JobConfig(
        mode=JobMode.CHECK,
        output_dir=args.out,
        k_max=args.k_max,
        emit_svg=args.svg,
        checks=list(args.names),
    )
