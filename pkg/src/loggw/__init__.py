"""Exact tools for logarithmic curve counts on log Calabi-Yau surfaces."""

__version__ = "0.1.0"
