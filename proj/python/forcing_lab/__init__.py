"""Bushy-tree forcing laboratory: bigness decisions, diagonal strings,
parity analysis, requirement settling and the stagewise graph construction."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
