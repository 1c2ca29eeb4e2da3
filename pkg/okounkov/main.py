# okounkov/main.py

"""
Command-line entry point.

Exit codes: 0 success, 2 schema violation, 3 failed mathematical
precondition, 4 internal invariant breach or a failed check.
"""
import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from okounkov import __version__
from okounkov.config import settings, validate_settings
from okounkov.errors import InvariantError, OkounkovError, SchemaError
from okounkov.logging_config import configure_logging, get_logger

# ---------------------------------------------
# IMPORT SUBCOMMANDS
# ---------------------------------------------
from okounkov.commands import SUBCOMMANDS
from okounkov.services.pipeline import run

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=settings.APP_NAME, description="Exact multipoint Okounkov bodies and Seshadri constants.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in SUBCOMMANDS:
        module.add_parser(subparsers).set_defaults(build_config=module.build_config)
    return parser


def _list_checks() -> int:
    import okounkov.checks  # noqa: F401
    from okounkov.services.check_registry import CHECK_REGISTRY

    for name in CHECK_REGISTRY:
        print(name)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching the schema exit code
        return int(exc.code or 0)

    configure_logging(args.log_level)
    try:
        validate_settings()
    except ValueError as exc:
        logger.error("invalid_settings", error=str(exc))
        return SchemaError.exit_code

    if getattr(args, "list", False):
        return _list_checks()

    try:
        config = args.build_config(args)
        outcome = run(config)
    except ValidationError as exc:
        logger.error("invalid_job", error=str(exc))
        return SchemaError.exit_code
    except OkounkovError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.exit_code

    print(outcome.report.model_dump_json(indent=2))
    if outcome.failed_checks:
        logger.error("checks_failed", failed=outcome.failed_checks)
        return InvariantError.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
