"""Flags shared by every subcommand."""
import argparse
from pathlib import Path
from typing import List

from okounkov.config import settings


def add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=Path(settings.OUTPUT_DIR), help="output directory")
    parser.add_argument("--svg", action="store_true", help="also write SVG plots of planar bodies")
    parser.add_argument("--log-level", default=None, help="override LOG_LEVEL for this run")


def add_input_flag(parser: argparse.ArgumentParser, *aliases: str) -> None:
    parser.add_argument("--input", *aliases, dest="input", type=Path, required=True, help="input JSON file")


def parse_indices(text: str) -> List[int]:
    """'0,2' -> [0, 2]"""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex indices, got {text!r}") from None
