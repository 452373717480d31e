"""Instrumented symmetric sorting portfolio and benchmark harness."""

__version__ = "0.1.0"
