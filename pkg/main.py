"""Main application entry point."""

import argparse
import sys
import time
from pathlib import Path
from typing import List, Optional

from app.core.shared.config import settings
from app.core.shared.exceptions import (
    DomainError,
    MissingEntryError,
    PreconditionError,
    ValidationError,
)
from app.core.utils.logger import configure_logging, get_logger, log_command, log_outcome
from app.features.cli.presentation.controllers.command_controller import COMMANDS, CommandController
from app.features.cli.presentation.schemas.run_config import load_run_config

DEFAULT_CONFIG = Path(__file__).parent / "app" / "features" / "cli" / "presentation" / "default_config.json"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="wallcross",
        description="Exact wall-crossing calculus for rank -1 and one-dimensional classes.",
    )
    parser.add_argument(
        "--config",
        type=Path,
        default=DEFAULT_CONFIG,
        help=f"Path to the JSON run configuration (default: {DEFAULT_CONFIG.name})",
    )
    parser.add_argument("--command", required=True, choices=COMMANDS, help="Command to run")
    parser.add_argument("--out", type=Path, default=None, help="Directory for the report file (default: stdout)")
    parser.add_argument(
        "--format",
        choices=("json", "csv"),
        default=None,
        help=f"Report format (default: {settings.default_format})",
    )
    parser.add_argument("--seed", type=int, default=None, help="Seed override for selftest")
    parser.add_argument("--log-level", default=None, help=f"Log level (default: {settings.log_level})")
    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    configure_logging(level=args.log_level)
    logger = get_logger(__name__)
    fmt = args.format or settings.default_format

    log_command(args.command, config=str(args.config), format=fmt)
    started = time.perf_counter()
    try:
        config = load_run_config(args.config)
        outcome = CommandController().run(config, args.command, seed=args.seed)
        report = outcome.render(fmt)
    except (ValidationError, MissingEntryError, DomainError, PreconditionError) as exc:
        logger.error("command rejected", command=args.command, error=exc.message)
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if args.out is None:
        sys.stdout.write(report)
    else:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / f"{args.command}.{fmt}").write_text(report, encoding="utf-8")

    log_outcome(args.command, outcome.passed, int((time.perf_counter() - started) * 1000))
    return EXIT_OK if outcome.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
