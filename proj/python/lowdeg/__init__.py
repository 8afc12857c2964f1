"""Quadrics through low-degree varieties.

Exact formulas for a_m, constructions of low-degree varieties over GF(p) or Q,
and their ideal deficiency and secant invariants.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.3.0"
