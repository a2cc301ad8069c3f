from math import comb

import pytest

from instantons.algebra import QQ
from instantons.cohomology import (
    CechStabilityError, CohomologyTable, LineBundleComplex, bott_dim, bott_vector,
    cech_hypercohomology, euler_char, lbc_dual, lbc_tensor, lbc_twist, monad_cohomology,
)
from instantons.forms import P1, P2, P3, QUADRIC, FormMatrix

from conftest import cached_sample


def h0_oracle(N, d):
    return comb(d + N, N) if d >= 0 else 0


def line_oracle(N, d):
    """h^i(O(d)) on P^N by counting monomials and Serre duality (K = O(-N-1))."""
    v = [0] * (N + 1)
    v[0] = h0_oracle(N, d)
    v[N] = h0_oracle(N, -N - 1 - d)
    return tuple(v)


@pytest.mark.parametrize("space,N", [(P1, 1), (P2, 2), (P3, 3)])
def test_bott_matches_oracle(space, N):
    for d in range(-8, 9):
        assert bott_vector(space, d) == line_oracle(N, d)


def test_quadric_kunneth():
    assert bott_dim(QUADRIC, 1, (-3, 1)) == 2 * 2
    assert bott_dim(QUADRIC, 2, (-2, -2)) == 1
    assert euler_char(QUADRIC, (1, 1)) == 4


@pytest.mark.parametrize("space", [P1, P2, QUADRIC])
def test_cech_single_line_bundles(space):
    for d in range(-5, 6):
        dd = (d, 1 - d) if space == QUADRIC else d
        res = cech_hypercohomology(LineBundleComplex.single(space, dd))
        assert res.vector(0, space.dim) == bott_vector(space, dd)


def test_cech_koszul_is_exact():
    # 0 -> O(-1) -> O -> O_H -> 0 on P2: the cone of x0 has the cohomology of O_H = O_P1
    x0 = FormMatrix.from_linear(P2, QQ, [[[1, 0, 0]]])
    C = LineBundleComplex(P2, QQ, ((-1,), (0,)), (x0,), start=-1)
    res = cech_hypercohomology(lbc_twist(C, 2))
    assert res.vector(0, 2) == (3, 0, 0)


def test_display_and_cech_agree_on_a_sample():
    m = cached_sample(2, 2)
    for k in range(-3, 2):
        assert monad_cohomology(m, k) == cech_hypercohomology(m.complex(k)).vector(0, 3)


def test_stability_check_catches_small_bounds():
    m = cached_sample(2, 2)
    with pytest.raises(CechStabilityError):
        cech_hypercohomology(m.complex(-4), bound=1)
    assert cech_hypercohomology(m.complex(-4), bound=2).vector(0, 3) == (0, 0, 2, 0)


def test_euler_characteristic_is_an_integer():
    C = lbc_tensor(cached_sample(2, 1).complex(), lbc_dual(cached_sample(2, 1).complex()))
    chi = lbc_twist(C, -2).euler_characteristic()
    assert chi == 0 and isinstance(chi, int)


def test_table_roundtrip():
    m = cached_sample(2, 1)
    t = CohomologyTable.build(lambda k: monad_cohomology(m, k), range(-3, 1))
    assert CohomologyTable.from_json(t.to_json()) == t
    assert t[(1, -1)] == 1
    assert t.to_csv().splitlines()[0] == "i,k,dim"
