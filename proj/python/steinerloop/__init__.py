"""Steiner triple systems, Steiner loops, and Moufang's theorem."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    LoopTable,
    ParseError,
    PreconditionError,
    QuasigroupTable,
    SteinerError,
    TripleSystem,
    ValidationError,
)

__version__ = "0.1.0"
