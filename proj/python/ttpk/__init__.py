"""Traveling tournament toolkit: k-tour covers, super-game schedules and the
reduction between them."""

from ._core import *  # noqa: F401,F403
from ._core import Error, CapacityExceeded  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
