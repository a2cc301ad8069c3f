import random

import pytest

from instantons.algebra import QQ, Matrix, is_invertible
from instantons.forms import P3, FormMatrix
from instantons.monad import (
    Monad, act, change_coordinates, coordinate_plane, dumps_monad, find_jumping_lines,
    find_trivializing_line, hom_dimension, loads_monad, monad_isomorphic, restrict,
    roundtrip_text, sample_instanton, splitting_type, validate, verify_intertwiner,
)
from instantons.monad.sampling import SamplingError

from conftest import cached_sample


def random_gl(k, rng):
    while True:
        M = Matrix([[rng.randint(-2, 2) for _ in range(k)] for _ in range(k)], QQ)
        if is_invertible(M):
            return M


def test_shape_guards():
    eps = FormMatrix.from_linear(P3, QQ, [[[1, 0, 0, 0]]] * 3)
    q = FormMatrix.from_linear(P3, QQ, [[[0, 1, 0, 0]] * 3])
    with pytest.raises(ValueError):
        Monad(eps, q)  # r = 1
    with pytest.raises(ValueError):
        sample_instanton(3, 2)


@pytest.mark.parametrize("r,n", [(2, 1), (2, 2), (3, 3)])
def test_samples_validate(r, n):
    m = cached_sample(r, n)
    rep = validate(m)
    assert rep.ok
    assert rep["instanton_condition"].ok
    assert (m.r, m.n) == (r, n)


def test_sampling_is_deterministic():
    assert dumps_monad(sample_instanton(2, 1, 5)) == dumps_monad(sample_instanton(2, 1, 5))


def test_validation_rejects_non_complex(m22):
    bad = Monad(m22.epsilon, m22.q + m22.q.scale(0) + FormMatrix.from_linear(
        P3, QQ, [[[1, 0, 0, 0]] + [[0, 0, 0, 0]] * 5] * 2))
    rep = validate(bad)
    assert not rep.ok and not rep["complex"].ok


def test_standing_hypothesis_message(m21):
    assert "exception" in validate(m21)["standing_hypothesis"].detail


def test_serialization_roundtrip(m22):
    text = dumps_monad(m22)
    assert loads_monad(text) == m22
    assert roundtrip_text(text, loads_monad, dumps_monad)
    assert not roundtrip_text(text.replace(",", ", ", 1), loads_monad, dumps_monad)
    with pytest.raises(ValueError, match="line 1"):
        loads_monad("{oops")
    with pytest.raises(ValueError):
        loads_monad('{"field":"Q","r":2,"n":2,"epsilon":[],"q":[]}')


def test_generic_line_trivializes(m22):
    line = find_trivializing_line(m22)
    assert line is not None
    assert splitting_type(m22, line).degrees == (0, 0)


def test_jumping_lines_over_small_field():
    m = cached_sample(2, 1)
    jumps = find_jumping_lines(m, p=7, pencils=3)
    assert all(sum(t.degrees) == 0 and not t.is_trivial for _, t in jumps)


def test_plane_restriction_dims(m22):
    from instantons.cohomology import monad_cohomology
    mH = restrict(m22, coordinate_plane(4, QQ))
    assert mH.space.tag == "P2"
    assert monad_cohomology(mH, -1)[1] == 2


def test_planted_isomorphism(m22):
    rng = random.Random(4)
    gC, gV, gW = random_gl(6, rng), random_gl(2, rng), random_gl(2, rng)
    m2 = act(m22, gC, gV, gW)
    found = monad_isomorphic(m22, m2)
    assert found is not None
    assert verify_intertwiner(m22, m2, *found)


def test_independent_samples_separated(m22):
    other = cached_sample(2, 2, 1)
    assert monad_isomorphic(m22, other) is None
    assert hom_dimension(m22, m22) >= 1


def test_coordinate_change_preserves_validity(m21):
    M = random_gl(4, random.Random(2))
    assert validate(change_coordinates(m21, M)).ok
