"""Supersingular elliptic curves and plane quartics over GF(2^n)."""

__version__ = "0.1.0"
