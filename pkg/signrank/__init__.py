"""Exact sign-pattern minimum-rank toolkit: the nine-point counterexample and its certificates."""

__version__ = "0.1.0"
