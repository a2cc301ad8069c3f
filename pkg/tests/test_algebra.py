import random
from fractions import Fraction

import pytest

from instantons.algebra import (
    GF, QQ, QQI, Gaussian, Matrix, field_from_tag, inverse, is_invertible, is_prime,
    kernel_basis, rank, rank_mod_p, solve, sqrt_minus_one,
)
from instantons.algebra.linalg import bareiss_rank, integer_rank

from conftest import fraction_rank


def random_matrix(rng, nr, nc, h=4, rank_cap=None):
    if rank_cap is None:
        return [[rng.randint(-h, h) for _ in range(nc)] for _ in range(nr)]
    A = [[rng.randint(-h, h) for _ in range(rank_cap)] for _ in range(nr)]
    B = [[rng.randint(-h, h) for _ in range(nc)] for _ in range(rank_cap)]
    return [[sum(A[i][k] * B[k][j] for k in range(rank_cap)) for j in range(nc)] for i in range(nr)]


def test_scalar_formats_roundtrip():
    assert QQ.format(Fraction(-3, 4)) == "-3/4"
    assert QQ.parse("5/10") == Fraction(1, 2)
    z = Gaussian(Fraction(1, 2), -3)
    assert QQI.parse(QQI.format(z)) == z
    F = GF(7)
    assert F.format(F(10)) == "3 mod 7"
    assert F.parse("3 mod 7") == F(3)
    with pytest.raises(ValueError):
        field_from_tag("R")


def test_gaussian_arithmetic():
    z, w = Gaussian(1, 2), Gaussian(3, -1)
    assert z * w == Gaussian(5, 5)
    assert (z / w) * w == z
    assert z.conjugate() * z == Gaussian(z.norm(), 0)


def test_prime_field():
    F = GF(13)
    assert F(5) / F(5) == F.one
    assert is_prime(2147483629) and not is_prime(2147483629 * 3)
    p = 10009  # 1 mod 4
    i = sqrt_minus_one(p)
    assert i * i % p == p - 1


@pytest.mark.parametrize("seed", range(12))
def test_rank_matches_oracle(seed):
    rng = random.Random(seed)
    nr, nc = rng.randint(1, 9), rng.randint(1, 9)
    rows = random_matrix(rng, nr, nc, rank_cap=rng.randint(0, min(nr, nc)))
    expected = fraction_rank(rows)
    assert rank(Matrix(rows, QQ)) == expected
    assert bareiss_rank(rows) == expected
    assert integer_rank(rows) == expected
    assert rank_mod_p(Matrix(rows, QQ), 2147483629) <= expected


def test_gaussian_rank_realification():
    # rows (1, i) and (i, -1) are proportional over Q(i)
    M = Matrix([[1, Gaussian(0, 1)], [Gaussian(0, 1), -1]], QQI)
    assert rank(M) == 1


def test_kernel_solve_inverse(rng):
    rows = random_matrix(rng, 4, 7, rank_cap=3)
    M = Matrix(rows, QQ)
    K = kernel_basis(M)
    assert K.ncols == 7 - 3
    assert (M @ K).is_zero()
    A = Matrix([[2, 1], [1, 1]], QQ)
    assert inverse(A) @ A == Matrix.identity(2, QQ)
    assert not is_invertible(Matrix([[1, 2], [2, 4]], QQ))
    b = Matrix([[3], [2]], QQ)
    assert A @ solve(A, b) == b
