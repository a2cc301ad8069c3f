"""Dense matrices over exact fields and the handful of algorithms we need.

Ranks over Q use fraction-free (Bareiss) elimination on a row-scaled integer
copy; Q(i) ranks go through the realification [[A, -B], [B, A]]; F_p uses
plain elimination on residues.  Kernels and solutions use a reduced row
echelon form with first-nonzero pivoting, so bases are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .fields import DEFAULT_PRIME, QQ, QQI, Field, PrimeField
from . import modular

_CHECK_PRIME = DEFAULT_PRIME


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Sequence], field: Field, ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, rows, field, ncols):
        # trusted constructor: entries already in the field
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "nrows", len(rows))
        object.__setattr__(m, "ncols", ncols)
        object.__setattr__(m, "rows", tuple(tuple(r) for r in rows))
        return m

    @classmethod
    def zeros(cls, nrows, ncols, field):
        z = field.zero
        return cls._raw([[z] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n, field):
        z, o = field.zero, field.one
        return cls._raw([[o if i == j else z for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def from_columns(cls, cols, field, nrows):
        cols = list(cols)
        return cls._raw([[c[i] for c in cols] for i in range(nrows)], field, len(cols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self):
        if self.nrows == 0:
            return Matrix._raw([[] for _ in range(self.ncols)], self.field, 0)
        return Matrix._raw([list(c) for c in zip(*self.rows)], self.field, self.nrows)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        z = self.field.zero
        out = []
        for row in self.rows:
            out.append([sum((a * b for a, b in zip(row, col) if a and b), z) for col in cols])
        return Matrix._raw(out, self.field, other.ncols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                           self.field, self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix._raw([[-a for a in r] for r in self.rows], self.field, self.ncols)

    def scale(self, c):
        c = self.field(c)
        return Matrix._raw([[c * a for a in r] for r in self.rows], self.field, self.ncols)

    def conj(self):
        f = self.field
        return Matrix._raw([[f.conj(a) for a in r] for r in self.rows], f, self.ncols)

    @property
    def H(self):
        """Conjugate transpose."""
        return self.conj().T

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return Matrix._raw([[self.rows[i][j] for j in cols] for i in rows], self.field, len(cols))

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row mismatch")
        return Matrix._raw([a + b for a, b in zip(self.rows, other.rows)], self.field,
                           self.ncols + other.ncols)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("column mismatch")
        return Matrix._raw(self.rows + other.rows, self.field, self.ncols)

    def is_zero(self):
        return not any(a for r in self.rows for a in r)

    def change_field(self, field):
        return Matrix(self.rows, field, self.ncols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.field == other.field and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field.tag, self.rows))

    def to_strings(self):
        return [[self.field.format(a) for a in r] for r in self.rows]

    @classmethod
    def from_strings(cls, rows, field):
        parsed = [[field.parse(s) for s in r] for r in rows]
        return cls._raw(parsed, field, len(parsed[0]) if parsed else 0)

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(a) for a in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols} over {self.field.tag}]({body})"


# -- rank ---------------------------------------------------------------------

def _integer_rows(rows):
    out = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * den) for x in row])
    return out


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination (destroys input)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for i in range(rank + 1, len(m)):
            a = m[i][c]
            row_i, row_r = m[i], m[rank]
            m[i] = [(p * row_i[j] - a * row_r[j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def integer_rank(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix.

    The rank mod p never exceeds the rank over Q, so a full-rank answer mod
    p is already exact; otherwise fall back to Bareiss.
    """
    if not rows or not rows[0]:
        return 0
    full = min(len(rows), len(rows[0]))
    if modular.rank_mod_p([[x % _CHECK_PRIME for x in r] for r in rows], _CHECK_PRIME) == full:
        return full
    return bareiss_rank(rows)


def rank(M: Matrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    f = M.field
    if f == QQ:
        return integer_rank(_integer_rows(M.rows))
    if f == QQI:
        re_rows = [[x.re for x in r] for r in M.rows]
        im_rows = [[x.im for x in r] for r in M.rows]
        real = [a + [-b for b in bb] for a, bb in zip(re_rows, im_rows)]
        real += [b + a for a, b in zip(re_rows, im_rows)]
        return integer_rank(_integer_rows(real)) // 2
    if isinstance(f, PrimeField):
        return modular.rank_mod_p([[x.v for x in r] for r in M.rows], f.p)
    raise TypeError(f"unsupported field {f}")


def rank_mod_p(M: Matrix, p: int) -> int:
    """Rank of the reduction of M modulo p (M must have p-integral entries)."""
    return modular.rank_mod_p([[M.field.to_modp(x, p) for x in r] for r in M.rows], p)


# -- echelon forms ------------------------------------------------------------

def _ff_gauss_jordan(m: list[list[int]]):
    """Fraction-free Gauss-Jordan on an integer matrix (in place).

    Every update (p * row_i - a * row_r) / prev is an exact division; at the
    end each pivot equals the common value d returned with the pivots.
    """
    ncols = len(m[0]) if m else 0
    pivots = []
    r, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        row_r = m[r]
        for i in range(len(m)):
            if i == r:
                continue
            a = m[i][c]
            row_i = m[i]
            if a:
                m[i] = [(p * x - a * y) // prev for x, y in zip(row_i, row_r)]
            elif p != prev:
                m[i] = [(p * x) // prev for x in row_i]
        prev = p
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots, prev


def rref(M: Matrix):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    f = M.field
    if f == QQ and M.nrows and M.ncols:
        rows, pivots, d = _ff_gauss_jordan(_integer_rows(M.rows))
        return [[Fraction(x, d) for x in row] for row in rows], pivots
    zero = f.zero
    m = [list(r) for r in M.rows]
    pivots = []
    r = 0
    for c in range(M.ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = f.one / m[r][c]
        m[r] = [x * inv if x else zero for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                a = m[i][c]
                m[i] = [x - a * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel_basis(M: Matrix) -> Matrix:
    """Columns spanning the right null space, one per free column (canonical)."""
    f = M.field
    rows, pivots = rref(M)
    free = [c for c in range(M.ncols) if c not in set(pivots)]
    cols = []
    for fc in free:
        v = [f.zero] * M.ncols
        v[fc] = f.one
        for row, pc in zip(rows, pivots):
            v[pc] = -row[fc]
        cols.append(v)
    return Matrix.from_columns(cols, f, M.ncols)


class Inconsistent(Exception):
    pass


def solve(M: Matrix, b: Matrix) -> Matrix | None:
    """A particular solution X of M X = b, or None when inconsistent."""
    if M.nrows != b.nrows:
        raise ValueError(f"shape mismatch: {M.shape} vs rhs {b.shape}")
    f = M.field
    aug = M.hstack(b)
    rows, pivots = rref(aug)
    if any(pc >= M.ncols for pc in pivots):
        return None
    X = [[f.zero] * b.ncols for _ in range(M.ncols)]
    for row, pc in zip(rows, pivots):
        for j in range(b.ncols):
            X[pc][j] = row[M.ncols + j]
    return Matrix._raw(X, f, b.ncols)


def inverse(M: Matrix) -> Matrix:
    if M.nrows != M.ncols:
        raise ValueError("inverse of a non-square matrix")
    X = solve(M, Matrix.identity(M.nrows, M.field))
    if X is None or rank(M) < M.nrows:
        raise ZeroDivisionError("singular matrix")
    return X


def is_invertible(M: Matrix) -> bool:
    return M.nrows == M.ncols and rank(M) == M.nrows
