"""Exact computation of negative-order special-number families."""

from __future__ import annotations

from .exact import LAMBDA, LaurentPoly, QuadNum
from .families import *  # noqa: F401,F403
from .families import __all__ as _families_all

__version__ = "0.1.0"

__all__ = ["LaurentPoly", "QuadNum", "__version__", *_families_all]
