"""Enumeration of oriented rational (2-bridge) knots and links.

Counts by crossing number, Seifert-circle count and minimal genus, with a
brute-force enumeration oracle cross-checking every closed-form count.
"""

from .errors import ConsistencyError, InputError

__version__ = "0.1.0"

__all__ = ["ConsistencyError", "InputError", "__version__"]
