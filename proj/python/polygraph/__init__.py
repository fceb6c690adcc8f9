"""Functional graphs of polynomial maps over prime fields.

Thin Python surface over the C++ core: field arithmetic, graph construction
and decomposition, canonical labels, isomorphism testing, censuses of
non-isomorphic graphs, count bounds, family statistics and the instance-check
suites.
"""

from polygraph._core import *  # noqa: F401,F403
from polygraph._core import __version__  # noqa: F401
