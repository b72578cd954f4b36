"""Exact character codegrees of finite permutation groups."""

__version__ = "0.1.0"
