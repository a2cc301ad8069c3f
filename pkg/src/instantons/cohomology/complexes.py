"""Bounded complexes of direct sums of line bundles with form-valued maps."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import Field, QQ
from ..forms import AmbientSpace, Form, FormMatrix
from .bott import euler_char


@dataclass(frozen=True)
class LineBundleComplex:
    """T^0 -> T^1 -> ... with T^i = sum_j O(terms[i][j]).

    ``start`` is the cohomological degree of T^0, so a monad
    O(-1)^n -> O^(r+2n) -> O(1)^n has start = -1 and its bundle sits in
    degree 0.
    """

    space: AmbientSpace
    field: Field
    terms: tuple[tuple, ...]
    differentials: tuple[FormMatrix, ...]
    start: int = 0

    def __post_init__(self):
        terms = tuple(tuple(self.space.degree(self.space.mdeg(d)) for d in t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "differentials", tuple(self.differentials))
        if len(self.differentials) != max(len(terms) - 1, 0):
            raise ValueError("need exactly one differential between consecutive terms")
        for i, D in enumerate(self.differentials):
            if D.space != self.space:
                raise ValueError("differential on the wrong space")
            if D.shape != (len(terms[i + 1]), len(terms[i])):
                raise ValueError(f"differential {i} has shape {D.shape}, expected "
                                 f"{(len(terms[i + 1]), len(terms[i]))}")
            for a, row in enumerate(D.entries):
                for b, f in enumerate(row):
                    want = self.space.add(terms[i + 1][a], self.space.neg(terms[i][b]))
                    if f.coeffs and f.degree != want:
                        raise ValueError(f"entry ({a},{b}) of differential {i} has degree "
                                         f"{f.degree}, expected {want}")

    @classmethod
    def single(cls, space, d, field=QQ):
        return cls(space, field, ((d,),), ())

    @classmethod
    def zero(cls, space, field=QQ):
        return cls(space, field, ((),), ())

    def __len__(self):
        return len(self.terms)

    def degree_of_term(self, i):
        return self.start + i

    def is_complex(self) -> bool:
        for D1, D2 in zip(self.differentials, self.differentials[1:]):
            if not (D2 @ D1).is_zero():
                return False
        return True

    def ranks(self):
        return tuple(len(t) for t in self.terms)

    def euler_characteristic(self) -> int:
        return sum((-1 if (self.start + i) % 2 else 1) * sum(euler_char(self.space, d) for d in t)
                   for i, t in enumerate(self.terms))


def lbc_twist(C: LineBundleComplex, k) -> LineBundleComplex:
    sp = C.space
    return LineBundleComplex(sp, C.field, tuple(tuple(sp.add(d, k) for d in t) for t in C.terms),
                             C.differentials, C.start)


def lbc_dual(C: LineBundleComplex) -> LineBundleComplex:
    sp = C.space
    terms = tuple(tuple(sp.neg(d) for d in t) for t in reversed(C.terms))
    diffs = tuple(D.T for D in reversed(C.differentials))
    return LineBundleComplex(sp, C.field, terms, diffs, -(C.start + len(C.terms) - 1))


def lbc_tensor(C1: LineBundleComplex, C2: LineBundleComplex) -> LineBundleComplex:
    """Total complex of the tensor product, Koszul sign on the second factor."""
    if C1.space != C2.space:
        raise ValueError("tensor of complexes on different spaces")
    if C1.field != C2.field:
        raise ValueError("tensor of complexes over different fields")
    sp, field = C1.space, C1.field
    n1, n2 = len(C1.terms), len(C2.terms)
    # index of summand (i, j, a, b) inside total term i + j
    layout = []
    terms = []
    for k in range(n1 + n2 - 1):
        blocks, summands, off = {}, [], 0
        for i in range(max(0, k - n2 + 1), min(k, n1 - 1) + 1):
            j = k - i
            blocks[(i, j)] = off
            for a in C1.terms[i]:
                for b in C2.terms[j]:
                    summands.append(sp.add(a, b))
            off += len(C1.terms[i]) * len(C2.terms[j])
        layout.append(blocks)
        terms.append(tuple(summands))

    diffs = []
    for k in range(len(terms) - 1):
        src, tgt = layout[k], layout[k + 1]
        rows = [[None] * len(terms[k]) for _ in range(len(terms[k + 1]))]
        for (i, j), off in src.items():
            A, B = C1.terms[i], C2.terms[j]
            nb = len(B)
            if (i + 1, j) in tgt:
                toff = tgt[(i + 1, j)]
                D = C1.differentials[i]
                for a2 in range(D.nrows):
                    for a in range(D.ncols):
                        f = D.entries[a2][a]
                        if not f.coeffs:
                            continue
                        for b in range(nb):
                            rows[toff + a2 * nb + b][off + a * nb + b] = f
            if (i, j + 1) in tgt:
                toff = tgt[(i, j + 1)]
                D = C2.differentials[j]
                sign = -1 if (C1.start + i) % 2 else 1
                nb2 = D.nrows
                for a in range(len(A)):
                    for b2 in range(D.nrows):
                        for b in range(D.ncols):
                            f = D.entries[b2][b]
                            if not f.coeffs:
                                continue
                            rows[toff + a * nb2 + b2][off + a * nb + b] = f if sign > 0 else -f
        for r in range(len(rows)):
            for c in range(len(rows[r])):
                if rows[r][c] is None:
                    rows[r][c] = Form.zero(sp, sp.add(terms[k + 1][r], sp.neg(terms[k][c])))
        diffs.append(FormMatrix(sp, field, rows, len(terms[k])))
    return LineBundleComplex(sp, field, tuple(terms), tuple(diffs), C1.start + C2.start)


def lbc_change_field(C: LineBundleComplex, field: Field) -> LineBundleComplex:
    return LineBundleComplex(C.space, field, C.terms,
                             tuple(D.change_field(field) for D in C.differentials), C.start)
