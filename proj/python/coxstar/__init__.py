"""Demazure product, downward operation, and the subset face monoid of
finite Coxeter groups, with exact arithmetic throughout.

>>> from coxstar import Group
>>> Group("A3").star_sets([1, 2], [2, 3])
[2]
"""

from ._core import (
    Group,
    InternalMismatchError,
    NotALongestElement,
    TypeParseError,
)

__all__ = [
    "Group",
    "InternalMismatchError",
    "NotALongestElement",
    "TypeParseError",
]
