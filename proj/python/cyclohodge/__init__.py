"""Exact verification toolkit for unit groups modulo prime powers.

Core operations live in the compiled extension: unit-group arithmetic,
floor-multiplicity profiles, hypothesis checks, pair orbits, CM types, and
the constancy decision procedure with replayable certificates.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
