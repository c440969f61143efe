"""Exact planar Turán numbers for small graphs, with the extremal constructions that bound them."""

from __future__ import annotations

__version__ = "0.1.0"

from .graph import Graph  # noqa: E402
from .pattern import Pattern, contains, is_free, parse  # noqa: E402
from .planar import is_planar, is_triangulation  # noqa: E402

__all__ = ["Graph", "Pattern", "contains", "is_free", "is_planar", "is_triangulation", "parse", "__version__"]
