"""Offline figure generation for engine-toolkit CSV outputs."""

from .figures import RENDERERS, FigureSpec, SchemaError, render

__all__ = ["FigureSpec", "SchemaError", "render", "RENDERERS"]
__version__ = "0.1.0"
