"""Zeckendorf numeration, forbidden-pattern windows and orbits of u*q^n."""

__version__ = "0.1.0"
