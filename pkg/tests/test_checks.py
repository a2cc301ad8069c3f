import pytest

from instantons.algebra import GF, Matrix
from instantons.checks import (
    check_dimension_table, check_end_dims, check_instanton_condition, check_koszul_dims,
    check_mayer_vietoris, check_quadric_splitting, check_riemann_roch, check_tangent_dimension,
    check_tensor_vanishing, linearization, parse_grid, quadric_profile_expected, run_suite,
)
from instantons.forms import P3, FormMatrix
from instantons.monad import Monad, change_coordinates
from instantons.reports import FAIL, NONGENERIC, SKIPPED, json_lines, summary_csv

from conftest import cached_sample

# a coordinate change over F_5 putting the quadric in special position for the
# (2, 2) sample: the restriction picks up O(-1) + O(-3) instead of O(-2)^2
SPECIAL_F5 = [[0, 4, 2, 4], [4, 1, 2, 0], [0, 2, 3, 4], [0, 2, 3, 2]]


def special_quadric_sample():
    F = GF(5)
    return change_coordinates(cached_sample(2, 2).reduce_mod(5), Matrix(SPECIAL_F5, F))


@pytest.mark.parametrize("r,n", [(2, 1), (2, 2), (3, 3)])
def test_dimension_table_and_rr(r, n):
    m = cached_sample(r, n)
    assert check_dimension_table(m).passed
    rr = check_riemann_roch(m)
    assert rr.passed and rr.computed["h1(F)"] == 2 * n - r
    assert check_instanton_condition(m).passed


def test_instanton_condition_skips_non_complex(m22):
    bump = FormMatrix.from_linear(P3, m22.field, [[[1, 0, 0, 0]] + [[0, 0, 0, 0]] * 5] * 2)
    bad = Monad(m22.epsilon, m22.q + bump)
    assert check_instanton_condition(bad).status == SKIPPED


@pytest.mark.parametrize("r,n,expected", [(2, 1, 5), (2, 2, 13)])
def test_end_dims(r, n, expected):
    rep = check_end_dims(cached_sample(r, n))
    assert rep.passed
    assert rep.computed["h(End F)"][:3] == [1, expected, 0]


def test_tensor_vanishing_21(m21):
    rep = check_tensor_vanishing(m21, m21)
    assert rep.passed and rep.bound <= 10
    assert rep.computed["h1((F*G)(-1))"] == 2 * 1 + 2 * 1


def test_tangent_dimension(m22):
    assert linearization(m22).shape == (10 * 4, 8 * 2 * 6)
    rep = check_tangent_dimension(m22, h1_end=13)
    assert rep.passed and rep.computed["nullity"] == 56


def test_koszul_and_mayer_vietoris(m21):
    assert check_koszul_dims(m21).passed
    mv = check_mayer_vietoris(m21)
    assert mv.passed
    assert mv.computed["rank d0"] == 1  # F_H is never simple for c2 = 1


def test_quadric_profile_expected():
    assert quadric_profile_expected(3, 2, range(0, 3)) == (1, 1, [0, 2, 5])  # O(-1)^2 + O(-2)
    assert quadric_profile_expected(2, 2, [1, 2, 3])[2] == [0, 2, 4]


def test_quadric_splitting_generic_and_special(m22):
    assert check_quadric_splitting(m22).passed
    rep = check_quadric_splitting(special_quadric_sample())
    assert rep.status == NONGENERIC
    assert rep.prime is None and rep.field == "Fp:5"
    assert rep.computed["h0(F_Q(k,0))"] != rep.expected["h0(F_Q(k,0))"]
    assert rep.notes


def test_suite_reports_are_reproducible():
    grid = parse_grid("2:1")
    a, b = run_suite(grid, seed=2), run_suite(grid, seed=2)
    assert json_lines(a) == json_lines(b)
    assert all(r.status != FAIL for r in a)
    assert summary_csv(a).splitlines()[0].startswith("check,status,r,n,seed")
    assert '"seconds"' not in json_lines(a) and '"seconds"' in json_lines(a, include_timing=True)
