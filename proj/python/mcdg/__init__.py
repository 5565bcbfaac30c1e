"""Exact computations with dg-categories presented by structure constants.

The heavy lifting happens in the compiled extension; this package re-exports
its functional surface: parsing and emitting category descriptions, the ideal
of the Maurer-Cartan locus and its point counts, curvature checks, seeded
square-zero lift certificates, realization ranks, Segal checks, and
deformation-prestack summaries.
"""

from ._mcdg import Category, Error, direct_ideal, load, parse

__all__ = ["Category", "Error", "direct_ideal", "load", "parse"]
