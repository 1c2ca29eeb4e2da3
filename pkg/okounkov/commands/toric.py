"""toric: bodies, subdivision, Seshadri constant and lattice oracle of a Delzant polytope."""
import argparse

from okounkov.schemas_pkg.jobs import JobConfig, JobMode

from ._common import add_input_flag, add_output_flags, parse_indices

NAME = JobMode.TORIC.value
HELP = "multipoint bodies of a Delzant polytope at torus-fixed points"


def add_parser(subparsers) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(NAME, help=HELP)
    add_input_flag(parser)
    add_output_flags(parser)
    parser.add_argument("--k-max", type=int, default=None, help="top level of the lattice oracle")
    parser.add_argument("--points", type=parse_indices, default=None, help="chosen vertex indices, e.g. 0,2")
    return parser


def build_config(args: argparse.Namespace) -> JobConfig:
    return JobConfig(
        mode=JobMode.TORIC,
        input_path=args.input,
        output_dir=args.out,
        k_max=args.k_max,
        emit_svg=args.svg,
        points=args.points,
    )
