"""Exact algorithms and reduction generators for the 2-Club problem."""
