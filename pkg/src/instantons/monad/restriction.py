"""Restriction to planes, lines and the quadric; splitting types and framings."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from ..algebra import QQ, Field, Matrix, inverse, is_invertible, kernel_basis, rank
from ..cohomology import cech_hypercohomology
from ..forms import P1, P2, P3, Parametrization, segre
from .core import Monad, pullback


# -- parametrizations of linear subspaces --------------------------------------

def line_through(P, Q, field: Field = QQ) -> Parametrization:
    """z = s P + t Q."""
    M = Matrix([[p, q] for p, q in zip(P, Q)], field)
    if rank(M) < 2:
        raise ValueError("points do not span a line")
    return Parametrization.from_matrix(P3, P1, M, "line")


def plane_from_matrix(M: Matrix) -> Parametrization:
    if rank(M) < 3:
        raise ValueError("columns do not span a plane")
    return Parametrization.from_matrix(P3, P2, M, "plane")


def plane_from_covector(h, field: Field = QQ) -> Parametrization:
    """The plane {h . z = 0}, parametrized by a canonical kernel basis."""
    K = kernel_basis(Matrix([list(h)], field))
    if K.ncols != 3:
        raise ValueError("zero covector does not define a plane")
    return plane_from_matrix(K)


def coordinate_plane(k: int, field: Field = QQ) -> Parametrization:
    """{z_k = 0} (k = 1..4) with the remaining coordinates in order."""
    rows = []
    others = [i for i in range(4) if i != k - 1]
    for i in range(4):
        rows.append([1 if i == o else 0 for o in others])
    return Parametrization.from_matrix(P3, P2, Matrix(rows, field), f"z{k}=0")


def random_point(rng: random.Random, field: Field = QQ, height: int = 5):
    while True:
        pt = [rng.randint(-height, height) for _ in range(4)]
        if any(pt):
            return [field(x) for x in pt]


def random_line(rng: random.Random, field: Field = QQ, height: int = 5) -> Parametrization:
    while True:
        P, Q = random_point(rng, field, height), random_point(rng, field, height)
        try:
            return line_through(P, Q, field)
        except ValueError:
            continue


def line_coordinate_change(line: Parametrization, field: Field) -> Matrix:
    """Invertible M with z = M w sending {w3 = w4 = 0} onto the line."""
    L = line.matrix(field)
    for i, j in combinations(range(4), 2):
        cols = L.columns() + [[field.one if k == i else field.zero for k in range(4)],
                              [field.one if k == j else field.zero for k in range(4)]]
        M = Matrix.from_columns(cols, field, 4)
        if is_invertible(M):
            return M
    raise ValueError("line parametrization is degenerate")


# -- restriction -----------------------------------------------------------------

def restrict(m: Monad, target) -> Monad:
    """Restrict to a plane or line (a Parametrization) or to the quadric.

    ``target`` may be the string "quadric" (Segre embedding), or any
    Parametrization from P3.  The result is a Monad on the target space;
    use ``.complex(k)`` for its line-bundle complex.
    """
    if m.space != P3:
        raise ValueError("restriction starts from a monad on P3")
    if isinstance(target, str):
        if target != "quadric":
            raise ValueError(f"unknown restriction target {target!r}")
        target = segre(m.field)
    if target.source != P3:
        raise ValueError("parametrization must start from P3")
    return pullback(m, target)


# -- splitting types ------------------------------------------------------------

@dataclass(frozen=True)
class SplittingType:
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        if sum(self.degrees) != 0:
            raise ValueError(f"splitting type {self.degrees} does not sum to zero")

    @property
    def is_trivial(self):
        return not any(self.degrees)

    def __iter__(self):
        return iter(self.degrees)


def h0_on_line(ml: Monad, k: int, prime=None) -> int:
    res = cech_hypercohomology(ml.complex(k), prime=prime, check_stability=False)
    return res[0]


def splitting_type(m: Monad, line: Parametrization, prime: int | None = None) -> SplittingType:
    """Degrees a_i of F|line = sum O(a_i), read off from h^0(F|line(k))."""
    ml = m if m.space == P1 else restrict(m, line)
    B = ml.n + 1
    g = {k: h0_on_line(ml, k, prime) for k in range(-B - 1, B + 1)}
    delta = {k: g[k] - g[k - 1] for k in range(-B, B + 1)}
    delta[-B - 1] = 0
    if g[-B - 1] != 0 or delta[B] != ml.r:
        raise ValueError("splitting range exceeded; the restricted complex is not a bundle")
    degrees = []
    for k in range(-B, B + 1):
        degrees += [-k] * (delta[k] - delta[k - 1])
    return SplittingType(tuple(degrees))


def is_trivializing(m: Monad, line: Parametrization, prime=None) -> bool:
    ml = restrict(m, line)
    return h0_on_line(ml, -1, prime) == 0


def find_trivializing_line(m: Monad, trials: int = 50, seed: int = 0, prime=None):
    rng = random.Random(f"trivializing-line:{seed}")
    for _ in range(trials):
        line = random_line(rng, m.field)
        try:
            if is_trivializing(m, line, prime):
                return line
        except ValueError:
            continue
    return None


def find_jumping_lines(m: Monad, p: int = 101, seed: int = 0, pencils: int = 10):
    """Exhaustive search over random pencils of lines defined over F_p.

    Each pencil is {line through P and Q0 + x Q1 : x in F_p} plus the line
    through P and Q1.  Returns a list of (line, SplittingType).
    """
    from ..algebra import GF
    F = GF(p)
    mp = m.reduce_mod(p)
    rng = random.Random(f"jumping:{seed}")
    found = []
    for _ in range(pencils):
        P, Q0, Q1 = ([F(rng.randrange(p)) for _ in range(4)] for _ in range(3))
        if rank(Matrix([P, Q0, Q1], F)) < 3:
            continue
        cands = [[a + F(x) * b for a, b in zip(Q0, Q1)] for x in range(p)] + [Q1]
        for Q in cands:
            line = line_through(P, Q, F)
            try:
                st = splitting_type(mp, line)
            except ValueError:
                continue
            if not st.is_trivial:
                found.append((line, st))
        if found:
            break
    return found


# -- framings ----------------------------------------------------------------------

@dataclass(frozen=True)
class Frame:
    """Sections of F|line: columns of ``sections`` are vectors in the middle term.

    H^0(F_line) is the kernel of the constant coefficient matrix of q|line,
    and ``basis`` expresses the chosen frame in the canonical kernel basis.
    """

    line: Parametrization
    sections: Matrix  # (r + 2n) x r, canonical kernel basis
    basis: Matrix  # r x r invertible

    def frame_sections(self) -> Matrix:
        return self.sections @ self.basis

    def inverse(self) -> "Frame":
        return Frame(self.line, self.sections, inverse(self.basis))

    def compose(self, other: "Frame") -> "Frame":
        return Frame(self.line, self.sections, self.basis @ other.basis)


def _q_coefficients_on_line(ml: Monad) -> Matrix:
    """Stack the s- and t-coefficients of q|line: H^0(O^c) -> H^0(O(1)^n)."""
    return ml.q.linear_coefficients(0).vstack(ml.q.linear_coefficients(1))


def frame_along_line(m: Monad, line: Parametrization) -> Frame:
    ml = restrict(m, line)
    if h0_on_line(ml, -1) != 0:
        raise ValueError("line is not trivializing")
    K = kernel_basis(_q_coefficients_on_line(ml))
    if K.ncols != m.r:
        raise ValueError(f"h^0(F|line) = {K.ncols} != r")
    return Frame(line, K, Matrix.identity(m.r, m.field))


def frame_change(f1: Frame, f2: Frame) -> Matrix:
    """g with f2.frame_sections = f1.frame_sections . g (same line)."""
    from ..algebra import solve
    g = solve(f1.frame_sections(), f2.frame_sections())
    if g is None:
        raise ValueError("frames span different section spaces")
    return g
