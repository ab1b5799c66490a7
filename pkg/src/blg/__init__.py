"""Bi-labeled graph calculus: homomorphism matrices, the planar class P, and related tests."""

__version__ = "0.1.0"
