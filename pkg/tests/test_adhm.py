import random

import pytest

from instantons.adhm import (
    ADHMData, check_atiyah_pair, check_real_line_trivial,    adhm_to_monad, atiyah_pair, check_constraints, dumps_adhm, impose_quaternionic,
    loads_adhm, quaternionic_charge_one, real_line_exceptions, recover_left, rho_point,
    rho_pullback, rho_twist, thooft_data, twistor_line,
)
from instantons.algebra import QQI, Gaussian, Matrix
from instantons.monad import monad_isomorphic, roundtrip_text, verify_intertwiner

from conftest import cached_sample


@pytest.fixture(scope="module")
def charge_one():
    return quaternionic_charge_one(0)


def random_left(rng, c=4, n=1):
    g = lambda: Gaussian(rng.randint(-3, 3), rng.randint(-3, 3))
    return [Matrix([[g() for _ in range(n)] for _ in range(c)], QQI) for _ in range(4)]


def test_rho_is_antiholomorphic_involution_up_to_sign():
    z = [Gaussian(1, 2), 3, Gaussian(0, -1), 5]
    assert rho_point(rho_point(z)) == [-QQI(x) for x in z]


def test_rho_twist_squares_to_minus(m22):
    eps = m22.change_field(QQI).epsilon
    assert rho_twist(rho_twist(eps)) == eps.scale(QQI(-1))


@pytest.mark.parametrize("seed", range(5))
def test_impose_is_involutive(seed):
    left = random_left(random.Random(seed), c=6, n=2)
    d = impose_quaternionic(left)
    assert check_constraints(d)
    assert list(recover_left(d.right)) == left
    assert recover_left(impose_quaternionic(recover_left(d.right)).right) == d.left


def test_charge_one_solver(charge_one):
    d, m, rep = charge_one
    assert rep.ok and rep["adhm_equations"].ok and rep["instanton_condition"].ok
    found = monad_isomorphic(m, rho_pullback(m))
    assert found is not None and verify_intertwiner(m, rho_pullback(m), *found)
    assert real_line_exceptions(m, trials=20) == []
    assert atiyah_pair(m)


def test_atiyah_pair_fails_on_non_real_sample(m22):
    assert not atiyah_pair(m22.change_field(QQI))


def test_thooft_data_are_real():
    d = thooft_data(2, random.Random(1))
    m, rep = adhm_to_monad(d)
    assert rep.ok
    assert monad_isomorphic(m, rho_pullback(m)) is not None


def test_rejected_data(charge_one):
    d = charge_one[0]
    broken = ADHMData(d.n, d.r, d.left, (-d.right[0],) + d.right[1:])
    assert not check_constraints(broken)
    m, rep = adhm_to_monad(broken, validate_result=False)
    assert m is None and not rep["quaternionic_constraints"].ok


def test_twistor_lines_are_real():
    line = twistor_line([1, Gaussian(0, 1), 2, 0])
    assert line.contains(rho_point(line.point))


def test_adhm_json_roundtrip(charge_one):
    text = dumps_adhm(charge_one[0])
    assert loads_adhm(text) == charge_one[0]
    assert roundtrip_text(text, loads_adhm, dumps_adhm)


def test_real_structure_needs_gaussian_field():
    with pytest.raises(ValueError):
        rho_pullback(cached_sample(2, 1))


def test_rho_point_preserves_norm():
    z = [Gaussian(1, 2), Gaussian(-3, 1), 4, Gaussian(0, 5)]
    norm = lambda v: sum(QQI(x).norm() for x in v)
    assert norm(rho_point(z)) == norm(z)


def test_check_reports(charge_one, m22):
    _, m, _ = charge_one
    rep = check_real_line_trivial(m, trials=20, seed=1)
    assert rep.passed and rep.computed["trivial"] == 20
    assert rep.to_json() == check_real_line_trivial(m, trials=20, seed=1).to_json()
    assert check_atiyah_pair(m).passed
    assert check_atiyah_pair(m22.change_field(QQI)).failed


def test_atiyah_pair_is_gl_invariant(charge_one):
    from instantons.monad import act
    _, m, _ = charge_one
    rng = random.Random(8)
    g = lambda k: Matrix([[Gaussian(rng.randint(-2, 2), rng.randint(-2, 2)) if i != j else
                           Gaussian(20, 0) for j in range(k)] for i in range(k)], QQI)
    assert check_atiyah_pair(act(m, g(4), g(1), g(1))).passed
