"""Certificates for independence of iterated Whitehead doubles of torus knots."""

__version__ = "0.1.0"
