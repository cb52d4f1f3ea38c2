"""Process-wide logging.

Everything goes to stderr; stdout carries the JSON payload alone.
"""

import logging
import sys

from src.core.config import config

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def resolve_level(raw: str) -> str:
    """First word of LOG_LEVEL upper-cased, INFO when empty or unknown."""
    words = raw.split()
    level = words[0].upper() if words else "INFO"
    return level if level in LEVELS else "INFO"


log_level = resolve_level(config.log_level)

logging.basicConfig(
    level=getattr(logging, log_level),
    format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger("pbbs")

for name in ["uvicorn", "uvicorn.access", "uvicorn.error"]:
    logging.getLogger(name).setLevel(logging.WARNING)
