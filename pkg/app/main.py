"""
Teleportation GME: Command-Line Entry Point

Assembles the subcommands:
  measure         per-state three-qubit report (four-qubit inputs go to `four`)
  family          figure data for the named state families
  verify          every property suite; exit 1 on any failure
  oracle-compare  closed form vs brute force on random states
  four            four-qubit report with witness verdict

Exit codes: 0 success, 1 numerical or verification failure, 2 invalid input.
Run with: teleport-gme <subcommand> [flags]   or   python -m app.main ...
"""

import argparse
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

# Logging MUST be set up before any import that logs
from app.core.logger import get_logger, set_run_id, setup_logging

setup_logging()
logger = get_logger(__name__)

from app.commands import (  # noqa: E402
    family_command,
    four_command,
    measure_command,
    oracle_compare_command,
    verify_command,
)
from app.core.config import settings  # noqa: E402
from app.core.exceptions import GmeError, InvalidRunConfig  # noqa: E402
from app.enums.enums import FamilyName, OutputFormat, Party, Subcommand  # noqa: E402
from app.schemas.config_schema import RunConfig  # noqa: E402

COMMANDS: Dict[Subcommand, Callable[[RunConfig], int]] = {
    Subcommand.MEASURE: measure_command.handle,
    Subcommand.FAMILY: family_command.handle,
    Subcommand.VERIFY: verify_command.handle,
    Subcommand.ORACLE_COMPARE: oracle_compare_command.handle,
    Subcommand.FOUR: four_command.handle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teleport-gme",
        description=f"{settings.APP_NAME} {settings.APP_VERSION}",
    )
    parser.add_argument("subcommand", choices=[s.value for s in Subcommand])
    parser.add_argument("--input", dest="input_path", help="state JSON file")
    parser.add_argument("--family", choices=[f.value for f in FamilyName])
    parser.add_argument("--param", type=float, help="single family parameter in [0, 1]")
    parser.add_argument("--grid-points", type=int, default=settings.FIGURE_GRID_POINTS)
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    parser.add_argument("--trials", type=int)
    parser.add_argument("--out", dest="output_path", default="-", help="output file, '-' for stdout")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    parser.add_argument("--pivot", choices=[p.value for p in Party], default=Party.A.value)
    parser.add_argument("--coarse-grid", type=int)
    parser.add_argument("--log-level", default=None)
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if k != "log_level" and v is not None}
    try:
        return RunConfig(**fields)
    except ValidationError as exc:
        messages = "; ".join(err["msg"] for err in exc.errors())
        raise InvalidRunConfig(messages) from exc


def run(cfg: RunConfig) -> int:
    """Dispatch one validated configuration; errors become exit codes."""
    run_id = set_run_id()
    logger.info("Run started", extra={"subcommand": cfg.subcommand.value, "run_id": run_id})
    try:
        code = COMMANDS[cfg.subcommand](cfg)
    except GmeError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        logger.debug("Run failed", extra={"error": type(exc).__name__})
        return exc.exit_code
    logger.info("Run finished", extra={"subcommand": cfg.subcommand.value})
    return code


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    try:
        cfg = to_config(args)
    except GmeError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
