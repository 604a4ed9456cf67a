"""Exact field arithmetic and linear algebra over Q and GF(p)."""

from .field import QQ, FieldSpec, Scalar, is_prime
from .matrix import Matrix, rref, solve, stack
from .poly import Poly, charpoly, companion, is_similar, poly_gcd, rational_canonical_form
from .sampling import random_invertible, random_matrix, random_vector
from .subspace import (
    EchelonBasis,
    Subspace,
    contains,
    count_lines,
    enumerate_lines,
    enumerate_subspaces,
    enumerate_vectors,
    gaussian_binomial,
    kernel,
    line_representatives,
    spin,
    subspace_intersect,
    subspace_sum,
)

__all__ = [
    "QQ", "FieldSpec", "Scalar", "is_prime", "Matrix", "rref", "solve", "stack",
    "Poly", "charpoly", "companion", "is_similar", "poly_gcd", "rational_canonical_form",
    "random_invertible", "random_matrix", "random_vector",
    "EchelonBasis", "Subspace", "contains", "count_lines", "enumerate_lines",
    "enumerate_subspaces", "enumerate_vectors", "gaussian_binomial", "kernel",
    "line_representatives", "spin", "subspace_intersect", "subspace_sum",
]
