"""Log setup shared by the library and the command line. Reports are never
logged, they go to stdout through click."""

import logging

LoggerClass = logging.getLoggerClass()

FORMAT = "%(asctime)s | %(name)s | %(levelname)s | %(message)s"


def setup_logging(level: int = logging.INFO) -> None:
    """Sets up basic log levels & formats."""
    logging.basicConfig(level=level, format=FORMAT)


def verbosity_level(verbose: int) -> int:
    """WARNING without flags, one level lower per ``-v``."""
    return max(logging.WARNING - verbose * 10, 1)


def set_verbosity(verbose: int) -> None:
    logging.getLogger().setLevel(verbosity_level(verbose))


def get_logger(name: str) -> LoggerClass:
    return logging.getLogger(name)
