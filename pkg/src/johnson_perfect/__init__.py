"""Necessary-condition sieves and an exhaustive oracle for perfect codes in
the Johnson graph J(n, w)."""

__version__ = "0.1.0"
