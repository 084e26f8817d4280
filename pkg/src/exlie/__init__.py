"""Exact arithmetic for the f4/e6/e7/e8 R-analogue tower over Q(i)."""

from .linalg import GaussRat, Mat, Poly

__all__ = ["GaussRat", "Mat", "Poly"]
__version__ = "0.1.0"
