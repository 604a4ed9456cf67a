"""Exact computations for anticommutative and Hom-Lie algebras."""
