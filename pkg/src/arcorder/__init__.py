"""Invariant subspaces of nilpotent operators with subspace exponent at most 2."""

__version__ = "0.1.0"
