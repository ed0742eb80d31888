import logging

from orbispec import logger


def test_verbosity_level():
    assert logger.verbosity_level(0) == logging.WARNING
    assert logger.verbosity_level(1) == logging.INFO
    assert logger.verbosity_level(2) == logging.DEBUG
    assert logger.verbosity_level(9) == 1


def test_set_verbosity():
    root = logging.getLogger()
    before = root.level

    try:
        logger.set_verbosity(2)
        assert root.level == logging.DEBUG
    finally:
        root.setLevel(before)


def test_get_logger():
    assert logger.get_logger("orbispec.test").name == "orbispec.test"
