import argparse
import json
import sys
import traceback
from typing import Any, Dict, List, Optional

import uvicorn
from fastapi import FastAPI
from pydantic import ValidationError

from src import __version__
from src.api.endpoints import router as api_router
from src.bbs.periods import analyze_periods
from src.bbs.spectral import build_curve_recurrence
from src.bbs.state import evolve_rows
from src.bbs.suites import run_suite
from src.bbs.toda import bridge_check
from src.conversion.request_converter import (
    convert_args_to_run_config,
    convert_eps,
    convert_request_to_state,
)
from src.conversion.response_converter import (
    convert_cycle_response,
    convert_evolve_response,
    convert_invariants_response,
    convert_spectrum_response,
    convert_toda_response,
    convert_young_response,
    render,
)
from src.core.config import config
from src.core.constants import SUITES, Constants
from src.core.errors import PBBSError
from src.core.logging import logger, resolve_level
from src.models.api import RunConfig

app_title = "Periodic Box-Ball System"

app = FastAPI(title=app_title, version=__version__)

app.include_router(api_router)

STATE_COMMANDS = [
    Constants.CMD_EVOLVE,
    Constants.CMD_YOUNG,
    Constants.CMD_INVARIANTS,
    Constants.CMD_SPECTRUM,
    Constants.CMD_CYCLE,
    Constants.CMD_TODA,
]


def _eps_arg(text: str):
    try:
        return convert_eps(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    epilog = "\n".join(
        [
            "Environment variables:",
            "  PBBS_EPS, PBBS_PREC, PBBS_PREC_FACTOR, PBBS_GUARD_BITS, PBBS_ROOT_BITS,",
            "  PBBS_SEED, PBBS_CAP, PBBS_ENUM_BOUND, PBBS_STEPS, HOST, PORT, LOG_LEVEL",
            "",
            *config.summary(),
        ]
    )
    parser = argparse.ArgumentParser(
        prog="pbbs",
        description=f"{app_title} v{__version__}: exact evolution, invariants, spectra and periods.",
        epilog=epilog,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("command", choices=STATE_COMMANDS + [Constants.CMD_VERIFY, Constants.CMD_SERVE])
    parser.add_argument("--state", help='0/1 string or block text "Q=5,1,6;W=3,2,12;offset=0"')
    parser.add_argument("--steps", type=int, help="time steps for evolve and toda")
    parser.add_argument(
        "--eps",
        type=_eps_arg,
        help="decreasing eps ladder, e.g. 0.1,0.05,0.02; spectrum uses the first value",
    )
    parser.add_argument("--prec", type=int, help="working precision in bits (default: derived from L/eps)")
    parser.add_argument("--seed", type=int, help="seed for randomized verify suites")
    parser.add_argument("--cap", type=int, help="step cap for brute-force period search")
    parser.add_argument(
        "--format", choices=[Constants.FORMAT_JSON, Constants.FORMAT_ASCII], default=Constants.FORMAT_JSON
    )
    parser.add_argument("--suite", choices=SUITES, help="suite for verify")
    parser.add_argument("--quick", action="store_true", help="verify with reduced sweep sizes")
    return parser


def execute(cfg: RunConfig, quick: bool = False) -> Dict[str, Any]:
    """Compute the payload for one non-serve command."""
    if cfg.command == Constants.CMD_VERIFY:
        return run_suite(cfg.suite, cfg.seed, quick=quick).model_dump()

    x, b = convert_request_to_state(cfg.state)
    if cfg.command == Constants.CMD_EVOLVE:
        return convert_evolve_response(evolve_rows(x, cfg.steps))
    if cfg.command == Constants.CMD_YOUNG:
        return convert_young_response(x, b)
    if cfg.command == Constants.CMD_INVARIANTS:
        return convert_invariants_response(x, b)
    if cfg.command == Constants.CMD_SPECTRUM:
        return convert_spectrum_response(build_curve_recurrence(b, cfg.eps[0], cfg.prec), b)
    if cfg.command == Constants.CMD_CYCLE:
        return convert_cycle_response(analyze_periods(x, cfg.cap))
    if cfg.command == Constants.CMD_TODA:
        return convert_toda_response(bridge_check(b, cfg.eps, cfg.steps))
    raise ValueError(f"unknown command {cfg.command!r}")


def serve() -> None:
    print(f"{app_title} v{__version__}")
    for line in config.summary():
        print(line)
    print("")

    uvicorn.run(
        "src.main:app",
        host=config.host,
        port=config.port,
        log_level=resolve_level(config.log_level).lower(),
        reload=False,
    )


def _error(e: Exception) -> str:
    return json.dumps({"error": type(e).__name__, "detail": str(e)}, sort_keys=True)


def run(argv: Optional[List[str]] = None) -> int:
    """CLI entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.command == Constants.CMD_SERVE:
        serve()
        return 0
    if args.command in STATE_COMMANDS and not args.state:
        parser.print_usage(sys.stderr)
        print(f"pbbs: error: {args.command} needs --state", file=sys.stderr)
        return 2
    if args.command == Constants.CMD_VERIFY and not args.suite:
        parser.print_usage(sys.stderr)
        print(f"pbbs: error: verify needs --suite, one of {', '.join(SUITES)}", file=sys.stderr)
        return 2

    try:
        cfg = convert_args_to_run_config(args)
    except ValidationError as e:
        parser.print_usage(sys.stderr)
        print(f"pbbs: error: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2

    try:
        payload = execute(cfg, quick=args.quick)
    except PBBSError as e:
        logger.debug(f"{cfg.command} rejected: {e}")
        print(_error(e))
        return 1
    except Exception as e:
        logger.error(f"Unexpected error running {cfg.command}: {e}")
        logger.error(traceback.format_exc())
        print(_error(e))
        return 1

    print(render(cfg.command, payload, cfg.format))
    if cfg.command == Constants.CMD_VERIFY and not payload["passed"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
