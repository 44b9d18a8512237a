"""Exact decategorification toolkit.

Subpackages compute, in exact arithmetic, the numerical and matrix-valued
shadows of a family of parabolic highest-weight constructions: weight
combinatorics, truncated highest-weight modules, nilpotent cochain complexes,
merge/split functor matrices over integer Laurent polynomials, cube complexes
for slice words, and two small topological operads used for sanity checks.
"""

from decatkit.exactlin import QQ, PrimeField, LaurentPoly, SparseMatrix, FiniteComplex

__all__ = [
    "QQ",
    "PrimeField",
    "LaurentPoly",
    "SparseMatrix",
    "FiniteComplex",
]
