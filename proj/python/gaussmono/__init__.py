"""Python bindings for the gaussmono verification library."""

from ._core import *  # noqa: F401,F403
from ._core import DomainError  # noqa: F401

__version__ = "0.1.0"
