from math import comb

from instantons.algebra import QQ, Matrix, rank
from instantons.forms import (
    P1, P2, P3, QUADRIC, Form, FormMatrix, h0_count, monomial_basis, mult_map, segre,
    serre_dual_map, substitute,
)


def test_monomial_counts():
    for d in range(-2, 6):
        assert len(monomial_basis(P3, d)) == (comb(d + 3, 3) if d >= 0 else 0)
        assert h0_count(P2, d) == (comb(d + 2, 2) if d >= 0 else 0)
    assert h0_count(QUADRIC, (2, 1)) == 3 * 2
    assert h0_count(QUADRIC, (2, -1)) == 0


def test_form_arithmetic():
    x = [Form.variable(P3, k, QQ) for k in range(4)]
    f = x[0] * x[1] + x[2] * x[2]
    assert f.evaluate([1, 2, 3, 4]) == 2 + 9
    assert (f - f).is_zero()


def test_mult_map_is_multiplication():
    A = FormMatrix.from_linear(P1, QQ, [[[1, 2]]])  # x0 + 2 x1
    M = mult_map(A, 2)
    assert M.shape == (4, 3)
    assert rank(M) == 3  # multiplication by a nonzero form is injective


def test_serre_dual_map_is_transpose():
    A = FormMatrix.from_linear(P1, QQ, [[[1, -1]]])
    # H^1(O(-3)) -> H^1(O(-2)): dims 2 -> 1, dual of H^0(O(0)) -> H^0(O(1))
    D = serre_dual_map(A, -3)
    assert D.shape == (1, 2)
    assert D == mult_map(A.T, 0).T


def test_segre_pullback_degree():
    x = FormMatrix.from_linear(P3, QQ, [[[1, 0, 0, 0], [0, 0, 0, 1]]])
    y = substitute(x, segre(QQ))
    assert y.space == QUADRIC
    assert all(f.degree == (1, 1) for row in y.entries for f in row)
    pt = y.evaluate([1, 0, 1, 0])
    assert pt == Matrix([[1, 0]], QQ)
