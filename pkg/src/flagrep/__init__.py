"""Exact character computations for simple Lie groups and flag varieties."""
