import random
from fractions import Fraction

import pytest

from instantons.hirzebruch import (
    AutLElement, ExtensionData, HirzebruchError, QuotientRing, QuotientRingElement,
    aut_action, build_quadric_bundle, bundle_cohomology, cohomology_table, diagonal_scalar,
    dual_cohomology, dumps_extension, elementary_symmetric, generic_splitting, iv_prime,
    loads_extension, normalize_u1_slice, random_aut, random_extension_data, random_points,
    random_symbolic_data, random_t, riemann_roch_check, splitting_profile, t_action, term1,
    with_unit_iv_prime,
)
from instantons.algebra import QQ, Matrix

SHAPES = [(2, 2), (2, 3), (2, 4), (3, 4), (3, 5), (2, 5), (4, 6), (3, 6)]


def test_generic_splitting():
    assert generic_splitting(5, 2) == (2, 1)
    assert generic_splitting(4, 2) == (2, 0)
    assert generic_splitting(4, 3) == (1, 1)


def test_term1():
    assert term1(1, 0, 1, 1) == (0, True)
    assert term1(2, 1, 1, 1) == (1, True)
    assert term1(1, 1, 1, 0) == (0, False)


def test_elementary_symmetric():
    assert elementary_symmetric([1, 2, 3]) == (6, 11, 6)


def test_quotient_ring_reduction():
    # z (c0 + c1 z) = -c1 s2 + (c0 + c1 s1) z when z^2 = s1 z - s2
    R = QuotientRing.at_points([2, 5])
    s1, s2 = 7, 10
    assert R.z_times([3, 4]) == [-4 * s2, 3 + 4 * s1]
    t = R.element([0, 1])
    assert t.value_at(2) == 2


def test_quotient_ring_is_evaluation():
    pts = (1, -2, 3, 4)
    R = QuotientRing.at_points(pts)
    a, b = R.element([1, 2, 0, -1]), R.element([0, 3, 1, 1])
    for x in pts:
        assert (a * b).value_at(x) == a.value_at(x) * b.value_at(x)


def test_data_invariants():
    with pytest.raises(HirzebruchError):
        ExtensionData(3, 2, (1, 1, 2), ((0,) * 3,) * 2, ((0,) * 3,) * 2)
    with pytest.raises(HirzebruchError):
        ExtensionData(3, 2, (0, 1, 2), ((0,) * 3,) * 2, ((0,) * 3,) * 2)
    with pytest.raises(HirzebruchError):
        ExtensionData(2, 3, (1, 2), ((0,) * 2,) * 3, ((0,) * 2,) * 3)


def test_build_rejects_zero_pair():
    e = random_extension_data(2, 4, random.Random(0))
    # make column 1 of both value matrices zero: rows vanishing at x_1
    x1 = e.points[0]
    rows = tuple((-x1, 1, 0, 0) for _ in range(2))
    bad = ExtensionData(4, 2, e.points, rows, rows)
    with pytest.raises(HirzebruchError, match="j=1"):
        build_quadric_bundle(bad)
    with pytest.raises(HirzebruchError):
        build_quadric_bundle(random_symbolic_data(2, 3, random.Random(0)))


def test_generic_r2_m4():
    pres = build_quadric_bundle(random_extension_data(2, 4, random.Random(1)))
    assert len(pres.pairs) == 4
    assert bundle_cohomology(pres) == (0, 2, 0)
    assert riemann_roch_check(pres).passed


@pytest.mark.parametrize("r,m", SHAPES)
def test_pushforward_profile_and_rr(r, m):
    pres = build_quadric_bundle(random_extension_data(r, m, random.Random(r * 10 + m)))
    a, _ = generic_splitting(m, r)
    got, want = splitting_profile(pres, range(a - 2, a + 3))
    assert got == want
    assert got[1] == 0 and got[2] > 0  # first nonzero at k = a
    h0, h1, h2 = bundle_cohomology(pres)
    assert h0 - h1 + h2 == r - m


def test_serre_duality_consistency():
    pres = build_quadric_bundle(random_extension_data(3, 5, random.Random(7)))
    for k in [(0, 0), (1, -1), (-1, 2)]:
        h = bundle_cohomology(pres, k)
        d = dual_cohomology(pres, (-2 - k[0], -2 - k[1]))
        assert h == (d[2], d[1], d[0])


def test_identity_and_b_only_actions():
    e = random_extension_data(3, 5, random.Random(2))
    assert aut_action(AutLElement.identity(3, 2), e) == e
    B = Matrix([[2, 1], [0, 1]], QQ)
    w = AutLElement(Matrix.identity(1, QQ), B, Matrix.zeros(1, 2, QQ), Matrix.zeros(1, 2, QQ))
    e2 = aut_action(w, e)
    assert e2.block("I") == e.block("I")
    assert Matrix(e2.block("IV"), QQ) == B @ Matrix(e.block("IV"), QQ)


@pytest.mark.parametrize("trial", range(10))
def test_actions_preserve_cohomology(trial):
    rng = random.Random(f"invariance:{trial}")
    r, m = SHAPES[trial % len(SHAPES)]
    e = random_extension_data(r, m, rng)
    w1, w2 = random_aut(r, m, rng), random_aut(r, m, rng)
    assert aut_action(w1 @ w2, e) == aut_action(w1, aut_action(w2, e))
    t = random_t(e.ring, rng, e.points)
    e2 = t_action(t, aut_action(w1, e))
    a, _ = generic_splitting(m, r)
    twists = [(k1, k2) for k1 in range(-2, a + 2) for k2 in range(-2, 2)]
    assert cohomology_table(build_quadric_bundle(e), twists) == \
        cohomology_table(build_quadric_bundle(e2), twists)


def test_diagonal_acts_trivially():
    e = random_extension_data(3, 4, random.Random(5))
    w, t = diagonal_scalar(Fraction(-3, 2), e)
    assert t_action(t, aut_action(w, e)) == e


def test_t_action_coordinatewise():
    rng = random.Random(9)
    e = random_extension_data(2, 3, rng)
    t = random_t(e.ring, rng, e.points)
    V, V2 = e.values(), t_action(t, e).values()
    for j, x in enumerate(e.points):
        for i in range(2):
            assert V2[i, j] == t.value_at(x) * V[i, j]
    one = QuotientRingElement(e.ring, (1, 0, 0))
    assert t_action(one, e) == e
    with pytest.raises(HirzebruchError):
        t_action(QuotientRingElement(e.ring, (-e.points[0], 1, 0)), e)


@pytest.mark.parametrize("m", [2, 3])
def test_t_action_symbolic_matches_numeric(m):
    rng = random.Random(m)
    e = random_symbolic_data(2, m, rng)
    t = random_t(e.ring, rng, symbolic_height=2)
    for _ in range(3):
        pts = random_points(m, rng)
        assert t_action(t, e).specialize(pts) == t_action(t.specialize(pts), e.specialize(pts))


@pytest.mark.parametrize("r,m", [(2, 3), (3, 4), (3, 5), (4, 6), (2, 4)])
def test_normalize_slice(r, m):
    e = random_extension_data(r, m, random.Random(m))
    w, e2 = normalize_u1_slice(e)
    assert all(x == 0 for row in e2.block("III") for x in row)
    w2, e3 = normalize_u1_slice(e2)
    assert e3 == e2 and w2.H1.is_zero()
    assert build_quadric_bundle(e2) and cohomology_table(build_quadric_bundle(e), [(0, 0)]) == \
        cohomology_table(build_quadric_bundle(e2), [(0, 0)])


def test_normalize_with_unit_iv_prime():
    e = with_unit_iv_prime(random_extension_data(3, 5, random.Random(3)))
    assert iv_prime(e) == Matrix.identity(2, QQ)
    w, _ = normalize_u1_slice(e)
    assert w.H1 == -Matrix(e.block("III"), QQ)


def test_normalize_rejects_singular_iv_prime():
    e = random_extension_data(3, 5, random.Random(3))
    zero_bottom = tuple((0,) * 5 for _ in range(2))
    bad = ExtensionData(5, 3, e.points, e.left[:1] + zero_bottom, e.right)
    with pytest.raises(HirzebruchError, match="non-generic"):
        normalize_u1_slice(bad)


def test_extension_json_roundtrip():
    e = random_extension_data(3, 4, random.Random(0))
    text = dumps_extension(e)
    assert loads_extension(text) == e
    assert dumps_extension(loads_extension(text)) == text
