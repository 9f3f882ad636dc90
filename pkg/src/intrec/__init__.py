"""Exact linear recurrences for parametrized integrals of C-finite polynomial
sequences: creative telescoping on rational generating functions, with an
independent guessing path for cross-checks."""

__version__ = "0.1.0"
