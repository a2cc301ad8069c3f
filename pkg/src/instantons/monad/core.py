"""The Monad type and its categorical operations."""

from __future__ import annotations

from ..algebra import QQ, Field, Matrix
from ..cohomology import LineBundleComplex, lbc_tensor
from ..forms import P3, AmbientSpace, FormMatrix, Parametrization, block_diagonal, substitute


class Monad:
    """O(-1)^n --epsilon--> O^(r+2n) --q--> O(1)^n on P3 (or a restriction of it).

    Only shapes and linearity are enforced here; the complex condition and
    fibrewise ranks are the business of :func:`validate`.
    """

    __slots__ = ("r", "n", "epsilon", "q", "space", "field")

    def __init__(self, epsilon: FormMatrix, q: FormMatrix):
        if epsilon.space != q.space:
            raise ValueError("epsilon and q live on different spaces")
        if epsilon.field != q.field:
            raise ValueError("epsilon and q have different fields")
        n = epsilon.ncols
        c = epsilon.nrows
        if q.shape != (n, c):
            raise ValueError(f"q has shape {q.shape}, expected {(n, c)}")
        r = c - 2 * n
        if n < 1:
            raise ValueError("charge n must be at least 1 (n >= r >= 2 required)")
        if r < 2:
            raise ValueError(f"rank r = {r} < 2 violates the standing hypothesis")
        if r > 2 * n:
            raise ValueError(f"rank r = {r} > 2n is impossible for an instanton (h^1(F) = 2n - r)")
        unit = epsilon.space.unit
        for M in (epsilon, q):
            for row in M.entries:
                for f in row:
                    if f.coeffs and f.degree != unit:
                        raise ValueError("monad maps must be matrices of linear forms")
        for name, val in (("r", r), ("n", n), ("epsilon", epsilon), ("q", q),
                          ("space", epsilon.space), ("field", epsilon.field)):
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError("Monad is immutable")

    @classmethod
    def from_coefficients(cls, eps_rows, q_rows, field: Field = QQ, space: AmbientSpace = P3):
        """Entries given as coefficient vectors (c0, c1, c2, c3) of linear forms."""
        return cls(FormMatrix.from_linear(space, field, eps_rows),
                   FormMatrix.from_linear(space, field, q_rows))

    @property
    def rank_middle(self):
        return self.r + 2 * self.n

    def complex(self, k=None) -> LineBundleComplex:
        sp = self.space
        k = sp.zero_degree if k is None else k
        u = sp.unit
        A = sp.add(k, sp.neg(u))
        C = sp.add(k, u)
        return LineBundleComplex(sp, self.field,
                                 ((A,) * self.n, (k,) * self.rank_middle, (C,) * self.n),
                                 (self.epsilon, self.q), start=-1)

    def composite(self) -> FormMatrix:
        return self.q @ self.epsilon

    def change_field(self, field: Field) -> "Monad":
        return Monad(self.epsilon.change_field(field), self.q.change_field(field))

    def reduce_mod(self, p: int) -> "Monad":
        from ..algebra import GF
        F = GF(p)
        fn = lambda c: F(self.field.to_modp(c, p))
        return Monad(self.epsilon.map_coefficients(fn, F), self.q.map_coefficients(fn, F))

    def coefficient_list(self):
        """Flat tuple of every coefficient (for hashing / equality)."""
        out = []
        for M in (self.epsilon, self.q):
            for row in M.entries:
                for f in row:
                    out.append(tuple(sorted(f.coeffs.items())))
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, Monad) and self.space == other.space
                and self.field == other.field and self.epsilon == other.epsilon
                and self.q == other.q)

    def __hash__(self):
        return hash((self.space.tag, self.field.tag, self.coefficient_list()))

    def __repr__(self):
        return f"Monad(r={self.r}, n={self.n}, space={self.space.tag}, field={self.field.tag})"


def dualize(m: Monad) -> Monad:
    return Monad(m.q.T, m.epsilon.T)


def direct_sum(m1: Monad, m2: Monad) -> Monad:
    """Block-diagonal monad; the middle term is ordered (C1, C2)."""
    if m1.space != m2.space or m1.field != m2.field:
        raise ValueError("direct sum of monads on different spaces or fields")
    u = m1.space.unit
    return Monad(block_diagonal([m1.epsilon, m2.epsilon], u), block_diagonal([m1.q, m2.q], u))


def tensor_complex(m1: Monad, m2: Monad) -> LineBundleComplex:
    return lbc_tensor(m1.complex(), m2.complex())


def end_complex(m: Monad) -> LineBundleComplex:
    return tensor_complex(m, dualize(m))


def act(m: Monad, gC: Matrix, gV: Matrix, gW: Matrix) -> Monad:
    """The orbit point (gC . eps . gV^-1, gW . q . gC^-1)."""
    from ..algebra import inverse
    sp, f = m.space, m.field
    E = FormMatrix.scalar(sp, f, gC) @ m.epsilon @ FormMatrix.scalar(sp, f, inverse(gV))
    Q = FormMatrix.scalar(sp, f, gW) @ m.q @ FormMatrix.scalar(sp, f, inverse(gC))
    return Monad(E, Q)


def pullback(m: Monad, param: Parametrization) -> Monad:
    """Substitute the source variables; a linear change of coordinates or a restriction."""
    return Monad(substitute(m.epsilon, param), substitute(m.q, param))


def change_coordinates(m: Monad, M: Matrix) -> Monad:
    """The monad in new coordinates w with z = M w."""
    return pullback(m, Parametrization.from_matrix(m.space, m.space, M, "coordinate change"))
