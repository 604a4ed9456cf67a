"""Seeded random matrices for property checks and randomized tests."""

from __future__ import annotations

import random

from .field import FieldSpec
from .matrix import Matrix


def random_element(field: FieldSpec, rng: random.Random, bound: int = 5):
    if field.p:
        return rng.randrange(field.p)
    num = rng.randint(-bound, bound)
    den = rng.randint(1, 3)
    return field(num) / den


def random_vector(field: FieldSpec, n: int, rng: random.Random, bound: int = 5) -> tuple:
    return tuple(random_element(field, rng, bound) for _ in range(n))


def random_matrix(field: FieldSpec, rows: int, cols: int, rng: random.Random, bound: int = 5) -> Matrix:
    return Matrix(field, rows, cols, tuple(random_element(field, rng, bound) for _ in range(rows * cols)))


def random_invertible(field: FieldSpec, n: int, rng: random.Random, bound: int = 5) -> Matrix:
    while True:
        m = random_matrix(field, n, n, rng, bound)
        if m.is_invertible():
            return m
