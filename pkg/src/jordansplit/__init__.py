"""Exact verification of splittable Jordan homomorphisms between finite-dimensional algebras."""

__version__ = "0.1.0"
