"""Exact postage stamp numbers in segments and cyclic groups, and integer bases
with prescribed essential subsets."""

__version__ = "0.1.0"
