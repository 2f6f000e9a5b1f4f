"""Multiplicity computations for the category of large-annihilator gl(infinity) modules."""

__version__ = "0.1.0"
