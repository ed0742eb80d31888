"""Power structures over group rings, orbifold Hodge spectra and the
Macdonald type equations relating them."""

from .logger import setup_logging

__version__ = "0.1.0"

setup_logging()
