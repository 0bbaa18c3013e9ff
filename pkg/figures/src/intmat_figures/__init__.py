"""Figure rendering for intmat CSV output (pure presentation)."""

__version__ = "0.1.0"

from .render import FigureSpec, InputError, read_curve, read_histogram, render, save_figure

__all__ = [
    "FigureSpec",
    "InputError",
    "read_curve",
    "read_histogram",
    "render",
    "save_figure",
]
