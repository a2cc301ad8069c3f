from .fields import (
    QQ, QQI, GF, DEFAULT_PRIME, Field, FpElement, Gaussian, PrimeField,
    field_from_tag, is_prime, random_prime, sqrt_minus_one,
)
from .linalg import Matrix, inverse, is_invertible, kernel_basis, rank, rank_mod_p, rref, solve

__all__ = [
    "QQ", "QQI", "GF", "DEFAULT_PRIME", "Field", "FpElement", "Gaussian", "PrimeField",
    "field_from_tag", "is_prime", "random_prime", "sqrt_minus_one",
    "Matrix", "inverse", "is_invertible", "kernel_basis", "rank", "rank_mod_p", "rref", "solve",
]
