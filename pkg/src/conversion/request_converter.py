import argparse
import logging
from typing import Tuple

from src.bbs.state import parse_state, to_blocks
from src.core.config import parse_eps
from src.models.api import RunConfig
from src.models.state import BlockState, BoxString

logger = logging.getLogger(__name__)


def convert_request_to_state(text: str) -> Tuple[BoxString, BlockState]:
    """Parse a raw 0/1 string or block text into both encodings."""
    x = parse_state(text)
    b = to_blocks(x)
    logger.debug(f"Parsed state L={x.L}, N={b.N}: {b.text()}")
    return x, b


def convert_eps(text: str) -> Tuple[float, ...]:
    return parse_eps(text)


def convert_args_to_run_config(args: argparse.Namespace) -> RunConfig:
    """Map parsed CLI flags onto a RunConfig, leaving unset flags to the environment defaults."""
    fields = {"command": args.command, "format": args.format}
    for name in ("state", "prec", "steps", "seed", "cap", "suite"):
        value = getattr(args, name, None)
        if value is not None:
            fields[name] = value
    eps = getattr(args, "eps", None)
    if eps:
        fields["eps"] = convert_eps(eps) if isinstance(eps, str) else tuple(eps)
    return RunConfig(**fields)
