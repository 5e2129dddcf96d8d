"""HTTP service wrapping the screening library."""

from .app import app

__all__ = ["app"]
