"""Exact algorithms for perfect-matching structure.

Thin package wrapper: everything lives in the compiled extension.
"""

from ._mcgraph import *  # noqa: F401,F403
from ._mcgraph import __doc__  # noqa: F401
