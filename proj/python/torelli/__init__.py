"""Johnson filtration invariants of surface mapping classes."""

from ._torelli import *  # noqa: F401,F403
from ._torelli import TorelliError  # noqa: F401

__version__ = "0.1.0"
