# csformula/utils/logger.py
# Logs go to stderr so command output on stdout stays reproducible.
import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

logging.basicConfig(level=logging.WARNING, format=LOG_FORMAT, stream=sys.stderr)
logger = logging.getLogger("csformula")


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def configure_logging(level: str) -> None:
    logger.setLevel(getattr(logging, level.upper(), logging.WARNING))
