"""Exact computations with mathematical instanton bundles on P3."""

__version__ = "0.1.0"
