"""Exact Whitney numbers of ideal lattices of fences, crowns and their compositions."""
from .primitives import *  # noqa: F401,F403
from .poset import *  # noqa: F401,F403
from .families import *  # noqa: F401,F403
from .closed import *  # noqa: F401,F403
from .recurrences import *  # noqa: F401,F403
from .rankpoly import *  # noqa: F401,F403
from .sequences import *  # noqa: F401,F403

from . import closed, families, poset, primitives, rankpoly, recurrences, sequences

__version__ = "0.1.0"

__all__ = (
    primitives.__all__
    + poset.__all__
    + families.__all__
    + closed.__all__
    + recurrences.__all__
    + rankpoly.__all__
    + sequences.__all__
)
