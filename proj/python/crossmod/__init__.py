"""Crossed modules and 2-crossed modules over finite groups.

Groups are finite with elements numbered 0..n-1 and 0 the identity. Every
constructor validates its axioms; failures raise CrossmodError with a
``kind`` and a ``witness`` attribute.
"""

from ._crossmod import *  # noqa: F401,F403
from ._crossmod import CrossmodError, Group, Workspace, parse_files, parse_text

__all__ = [name for name in dir() if not name.startswith("_")]
