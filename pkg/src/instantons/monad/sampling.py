"""Seeded sampling of instanton monads over Q.

Default route: epsilon with random coefficients in [-5, 5], then q drawn from
the exact solution space of q . epsilon = 0.  Every row of q solves the same
10n x 4(r+2n) system, whose kernel has dimension 4r - 2n for generic
epsilon, so the route needs 4r >= 3n.  Below that (e.g. (2, 3)) we start
from a 't Hooft monad (padded by a trivial summand when r > 2) and walk
along the fibres of (epsilon, q) -> epsilon and (epsilon, q) -> q, each step
being a fresh random point of a linear space.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm

from ..algebra import QQ, Matrix, kernel_basis
from ..forms import P3, Form, FormMatrix, monomial_basis
from .core import Monad
from .validation import validate

HEIGHT = 5
QUADRICS = monomial_basis(P3, 2)
_QINDEX = {e: i for i, e in enumerate(QUADRICS)}
_UNITS = [tuple(1 if k == j else 0 for k in range(4)) for j in range(4)]


class SamplingError(RuntimeError):
    pass


def _linear_coeffs(f: Form):
    return [f.coeffs.get(u, 0) for u in _UNITS]


def q_system(eps: FormMatrix) -> Matrix:
    """Rows: (column j of eps, quadric monomial); cols: (middle index a, variable k).

    x is a valid row of q iff  system . x = 0.
    """
    c, n = eps.nrows, eps.ncols
    rows = [[0] * (4 * c) for _ in range(10 * n)]
    for j in range(n):
        for a in range(c):
            ea = _linear_coeffs(eps.entries[a][j])
            for k in range(4):
                for l in range(4):
                    if ea[l]:
                        e = tuple(_UNITS[k][t] + _UNITS[l][t] for t in range(4))
                        rows[10 * j + _QINDEX[e]][4 * a + k] += ea[l]
    return Matrix(rows, QQ)


def eps_system(q: FormMatrix) -> Matrix:
    """y is a valid column of epsilon iff system . y = 0."""
    n, c = q.nrows, q.ncols
    rows = [[0] * (4 * c) for _ in range(10 * n)]
    for i in range(n):
        for a in range(c):
            qa = _linear_coeffs(q.entries[i][a])
            for k in range(4):
                for l in range(4):
                    if qa[l]:
                        e = tuple(_UNITS[k][t] + _UNITS[l][t] for t in range(4))
                        rows[10 * i + _QINDEX[e]][4 * a + k] += qa[l]
    return Matrix(rows, QQ)


def _random_combination(K: Matrix, rng: random.Random):
    coeffs = [rng.randint(-HEIGHT, HEIGHT) for _ in range(K.ncols)]
    v = [sum((Fraction(K[i, j]) * coeffs[j] for j in range(K.ncols)), Fraction(0))
         for i in range(K.nrows)]
    den = lcm(*(x.denominator for x in v)) if v else 1
    return [x * den for x in v]


def _vector_to_forms(v, c):
    return [Form.linear(P3, v[4 * a:4 * a + 4], QQ) for a in range(c)]


def _draw_rows(K: Matrix, count: int, c: int, rng):
    rows = []
    for _ in range(count):
        rows.append(_vector_to_forms(_random_combination(K, rng), c))
    return rows


def random_epsilon(r: int, n: int, rng: random.Random) -> FormMatrix:
    c = r + 2 * n
    return FormMatrix.from_linear(P3, QQ, [[[rng.randint(-HEIGHT, HEIGHT) for _ in range(4)]
                                            for _ in range(n)] for _ in range(c)])


def q_for_epsilon(eps: FormMatrix, rng: random.Random) -> FormMatrix | None:
    K = kernel_basis(q_system(eps))
    n, c = eps.ncols, eps.nrows
    if K.ncols < n:
        return None
    return FormMatrix(P3, QQ, _draw_rows(K, n, c, rng), c)


def epsilon_for_q(q: FormMatrix, rng: random.Random) -> FormMatrix | None:
    K = kernel_basis(eps_system(q))
    n, c = q.nrows, q.ncols
    if K.ncols < n:
        return None
    cols = _draw_rows(K, n, c, rng)
    return FormMatrix(P3, QQ, [[cols[j][a] for j in range(n)] for a in range(c)], n)


def fibre_walk(m: Monad, rng: random.Random, steps: int = 2) -> Monad:
    eps, q = m.epsilon, m.q
    for _ in range(steps):
        eps = epsilon_for_q(q, rng) or eps
        q = q_for_epsilon(eps, rng) or q
    return Monad(eps, q)


def _seed_monad(r: int, n: int, rng: random.Random) -> Monad:
    from ..adhm import adhm_to_monad, thooft_data
    base, _ = adhm_to_monad(thooft_data(n, rng), validate_result=False)
    base = base.change_field(QQ)
    if r == 2:
        return base
    # pad with r - 2 trivial summands: columns of zeros in the middle term
    c = r + 2 * n
    z = Form.zero(P3, 1)
    eps = [list(row) for row in base.epsilon.entries] + [[z] * n for _ in range(r - 2)]
    q = [list(row) + [z] * (r - 2) for row in base.q.entries]
    return Monad(FormMatrix(P3, QQ, eps, n), FormMatrix(P3, QQ, q, c))


def sample_instanton(r: int, n: int, seed: int = 0, *, max_tries: int = 20,
                     trials: int = 64) -> Monad:
    if not (n >= r >= 2 or (r, n) == (2, 1)):
        raise ValueError(f"(r, n) = ({r}, {n}) violates n >= r >= 2")
    for attempt in range(max_tries):
        rng = random.Random(f"sample:{r}:{n}:{seed}:{attempt}")
        if 4 * r >= 3 * n:
            eps = random_epsilon(r, n, rng)
            q = q_for_epsilon(eps, rng)
            if q is None:
                continue
            m = Monad(eps, q)
        else:
            m = fibre_walk(_seed_monad(r, n, rng), rng)
        if validate(m, trials, seed=attempt).ok:
            return m
    raise SamplingError(f"no valid ({r}, {n}) monad after {max_tries} tries (seed {seed})")
