"""Homogeneous forms on P^3, P^2, P^1 and the quadric P^1 x P^1.

A form is a dict from exponent vectors to nonzero scalars.  On the quadric
the exponent vector is (s0, s1, t0, t1) and degrees are pairs.  H^0(O(d)) is
modelled by the monomials of degree d; H^top(O(d)) by the dual basis of the
monomials of degree K - d (K the canonical degree).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, Mapping

from .algebra import Field, Matrix


@dataclass(frozen=True)
class AmbientSpace:
    tag: str
    factors: tuple[int, ...]  # projective dimension of each factor

    @property
    def nvars(self) -> int:
        return sum(f + 1 for f in self.factors)

    @property
    def dim(self) -> int:
        return sum(self.factors)

    @property
    def is_product(self) -> bool:
        return len(self.factors) > 1

    @property
    def slices(self):
        out, lo = [], 0
        for f in self.factors:
            out.append((lo, lo + f + 1))
            lo += f + 1
        return out

    def mdeg(self, d) -> tuple[int, ...]:
        """Degree as a tuple with one entry per factor."""
        if isinstance(d, int):
            if self.is_product:
                raise ValueError(f"{self.tag} needs a bidegree, got {d}")
            return (d,)
        d = tuple(int(x) for x in d)
        if len(d) != len(self.factors):
            raise ValueError(f"degree {d} does not fit {self.tag}")
        return d

    def degree(self, md):
        """Inverse of mdeg: int for projective spaces, tuple for the quadric."""
        md = tuple(md)
        return md if self.is_product else md[0]

    def add(self, d, e):
        return self.degree(a + b for a, b in zip(self.mdeg(d), self.mdeg(e)))

    def neg(self, d):
        return self.degree(-a for a in self.mdeg(d))

    @property
    def canonical(self):
        return self.degree(-(f + 1) for f in self.factors)

    @property
    def unit(self):
        return self.degree(1 for _ in self.factors)

    @property
    def zero_degree(self):
        return self.degree(0 for _ in self.factors)

    def exponent_degree(self, exp) -> tuple[int, ...]:
        return tuple(sum(exp[lo:hi]) for lo, hi in self.slices)

    def __repr__(self):
        return self.tag


P3 = AmbientSpace("P3", (3,))
P2 = AmbientSpace("P2", (2,))
P1 = AmbientSpace("P1", (1,))
QUADRIC = AmbientSpace("Quadric", (1, 1))
SPACES = {s.tag: s for s in (P3, P2, P1, QUADRIC)}


@lru_cache(maxsize=None)
def _simplex(nvars: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of degree d in nvars variables, descending lex order."""
    if d < 0:
        return ()
    if nvars == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        for rest in _simplex(nvars - 1, d - a):
            out.append((a,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _basis(space: AmbientSpace, md: tuple[int, ...]):
    parts = [_simplex(f + 1, d) for f, d in zip(space.factors, md)]
    return tuple(sum(combo, ()) for combo in product(*parts))


def monomial_basis(space: AmbientSpace, d) -> tuple[tuple[int, ...], ...]:
    return _basis(space, space.mdeg(d))


def h0_count(space: AmbientSpace, d) -> int:
    out = 1
    for f, k in zip(space.factors, space.mdeg(d)):
        out *= comb(k + f, f) if k >= 0 else 0
    return out


class Form:
    """Homogeneous polynomial with exact coefficients."""

    __slots__ = ("space", "degree", "coeffs")

    def __init__(self, space: AmbientSpace, degree, coeffs: Mapping | None = None):
        md = space.mdeg(degree)
        clean = {}
        for exp, c in (coeffs or {}).items():
            exp = tuple(exp)
            if len(exp) != space.nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} on {space.tag}")
            if space.exponent_degree(exp) != md:
                raise ValueError(f"monomial {exp} does not have degree {degree}")
            if c:
                clean[exp] = c
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "degree", space.degree(md))
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    @classmethod
    def _raw(cls, space, degree, coeffs):
        f = object.__new__(cls)
        object.__setattr__(f, "space", space)
        object.__setattr__(f, "degree", degree)
        object.__setattr__(f, "coeffs", coeffs)
        return f

    @classmethod
    def zero(cls, space, degree):
        return cls._raw(space, space.degree(space.mdeg(degree)), {})

    @classmethod
    def variable(cls, space, k, field):
        exp = [0] * space.nvars
        exp[k] = 1
        md = space.exponent_degree(exp)
        return cls._raw(space, space.degree(md), {tuple(exp): field.one})

    @classmethod
    def constant(cls, space, c):
        if not c:
            return cls.zero(space, space.zero_degree)
        return cls._raw(space, space.zero_degree, {(0,) * space.nvars: c})

    @classmethod
    def linear(cls, space, coeffs, field):
        """sum_k coeffs[k] * z_k (single-factor spaces)."""
        out = {}
        for k, c in enumerate(coeffs):
            c = field(c)
            if c:
                exp = [0] * space.nvars
                exp[k] = 1
                out[tuple(exp)] = c
        return cls._raw(space, space.unit, out)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "Form"):
        if other.degree != self.degree and other.coeffs and self.coeffs:
            raise ValueError("adding forms of different degrees")
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Form._raw(self.space, self.degree, out)

    def __neg__(self):
        return Form._raw(self.space, self.degree, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Form):
            if not other:
                return Form._raw(self.space, self.degree, {})
            return Form._raw(self.space, self.degree,
                             {e: c * other for e, c in self.coeffs.items()})
        deg = self.space.add(self.degree, other.degree)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                v = c1 * c2 if v is None else v + c1 * c2
                out[e] = v
        return Form._raw(self.space, deg, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def map_coefficients(self, fn):
        out = {}
        for e, c in self.coeffs.items():
            v = fn(c)
            if v:
                out[e] = v
        return Form._raw(self.space, self.degree, out)

    def evaluate(self, point, one=1):
        total = 0 * one
        for e, c in self.coeffs.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def coefficient(self, exp):
        return self.coeffs.get(tuple(exp), 0)

    def __eq__(self, other):
        return (isinstance(other, Form) and self.space == other.space
                and (self.degree == other.degree or not (self.coeffs or other.coeffs))
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.space.tag, self.degree, frozenset(self.coeffs.items())))

    def to_json(self, field: Field) -> dict:
        wide = any(k >= 10 for e in self.coeffs for k in e)
        key = (lambda e: ",".join(map(str, e))) if wide else (lambda e: "".join(map(str, e)))
        return {key(e): field.format(c) for e, c in sorted(self.coeffs.items(), reverse=True)}

    @classmethod
    def from_json(cls, data: dict, space, degree, field: Field):
        coeffs = {}
        for k, v in data.items():
            exp = tuple(int(x) for x in (k.split(",") if "," in k else k))
            coeffs[exp] = field.parse(v)
        return cls(space, degree, coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = _var_names(self.space)
        terms = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            mono = "*".join(f"{n}^{k}" if k > 1 else n for n, k in zip(names, e) if k)
            terms.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(terms)


def _var_names(space):
    if space.is_product:
        return ("s0", "s1", "t0", "t1")
    return tuple(f"z{i + 1}" for i in range(space.nvars))


class FormMatrix:
    """Matrix of forms; entry (a, b) typically has degree d_a - d_b."""

    __slots__ = ("space", "field", "nrows", "ncols", "entries")

    def __init__(self, space: AmbientSpace, field: Field, entries, ncols: int | None = None):
        entries = tuple(tuple(row) for row in entries)
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged form matrix")
            for f in row:
                if not isinstance(f, Form) or f.space != space:
                    raise ValueError("entries must be forms on the stated space")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(entries))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("FormMatrix is immutable")

    @classmethod
    def from_linear(cls, space, field, coeff_rows):
        """Entries given as coefficient vectors of linear forms (single-factor spaces)."""
        return cls(space, field, [[Form.linear(space, c, field) for c in row] for row in coeff_rows],
                   ncols=len(coeff_rows[0]) if coeff_rows else 0)

    @classmethod
    def zeros(cls, space, field, nrows, ncols, degree):
        z = Form.zero(space, degree)
        return cls(space, field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def scalar(cls, space, field, M: Matrix):
        return cls(space, field, [[Form.constant(space, x) for x in row] for row in M.rows], M.ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @property
    def degree(self):
        """Common degree of all nonzero entries (None if all are zero)."""
        degs = {f.degree for row in self.entries for f in row if f.coeffs}
        if len(degs) > 1:
            raise ValueError("form matrix is not homogeneous")
        return degs.pop() if degs else None

    @property
    def T(self):
        if self.nrows == 0:
            return FormMatrix(self.space, self.field, [[] for _ in range(self.ncols)], 0)
        return FormMatrix(self.space, self.field, [list(c) for c in zip(*self.entries)], self.nrows)

    def __matmul__(self, other: "FormMatrix"):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = None
                for k in range(self.ncols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a.coeffs and b.coeffs:
                        p = a * b
                        acc = p if acc is None else acc + p
                if acc is None:
                    deg = _product_degree(self.space, self.entries[i], [r[j] for r in other.entries])
                    acc = Form.zero(self.space, deg)
                row.append(acc)
            out.append(row)
        return FormMatrix(self.space, self.field, out, other.ncols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return FormMatrix(self.space, self.field,
                          [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                          self.ncols)

    def __neg__(self):
        return self.map_entries(lambda f: -f)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field(c)
        return self.map_entries(lambda f: f * c)

    def map_entries(self, fn):
        return FormMatrix(self.space, self.field, [[fn(f) for f in r] for r in self.entries],
                          self.ncols)

    def map_coefficients(self, fn, field: Field | None = None):
        field = field or self.field
        return FormMatrix(self.space, field,
                          [[f.map_coefficients(fn) for f in r] for r in self.entries], self.ncols)

    def change_field(self, field: Field):
        return self.map_coefficients(field, field)

    def conj(self):
        return self.map_coefficients(self.field.conj)

    def is_zero(self):
        return not any(f.coeffs for r in self.entries for f in r)

    def evaluate(self, point) -> Matrix:
        f = self.field
        pt = [f(x) for x in point]
        return Matrix._raw([[e.evaluate(pt, f.one) for e in r] for r in self.entries], f, self.ncols)

    def evaluate_mod_p(self, point, p: int):
        """Integer matrix of values at an F_p point (entries reduced mod p)."""
        out = []
        for row in self.entries:
            vals = []
            for e in row:
                total = 0
                for exp, c in e.coeffs.items():
                    t = self.field.to_modp(c, p)
                    for x, k in zip(point, exp):
                        if k:
                            t = t * pow(x, k, p) % p
                    total += t
                vals.append(total % p)
            out.append(vals)
        return out

    def linear_coefficients(self, k: int) -> Matrix:
        """Coefficient matrix of the k-th variable (linear single-factor entries)."""
        exp = [0] * self.space.nvars
        exp[k] = 1
        exp = tuple(exp)
        f = self.field
        return Matrix._raw([[e.coeffs.get(exp, f.zero) for e in r] for r in self.entries], f,
                           self.ncols)

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return FormMatrix(self.space, self.field, [[self.entries[i][j] for j in cols] for i in rows],
                          len(cols))

    def __eq__(self, other):
        return (isinstance(other, FormMatrix) and self.space == other.space
                and self.field == other.field and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.space.tag, self.shape, self.entries))

    def __repr__(self):
        return f"FormMatrix[{self.nrows}x{self.ncols} on {self.space.tag}]"


def _product_degree(space, row, col):
    for a, b in zip(row, col):
        return space.add(a.degree, b.degree)
    return space.zero_degree


def block_diagonal(mats: Iterable[FormMatrix], degree) -> FormMatrix:
    mats = list(mats)
    space, field = mats[0].space, mats[0].field
    z = Form.zero(space, degree)
    ncols = sum(m.ncols for m in mats)
    rows, off = [], 0
    for m in mats:
        for r in m.entries:
            rows.append([z] * off + list(r) + [z] * (ncols - off - m.ncols))
        off += m.ncols
    return FormMatrix(space, field, rows, ncols)


# -- multiplication maps ------------------------------------------------------

def mult_map(A: FormMatrix, d) -> Matrix:
    """Matrix of H^0(O(d))^cols -> H^0(O(d+e))^rows, v -> A v (block-major)."""
    space, f = A.space, A.field
    e = A.degree
    if e is None:
        e = space.zero_degree
    src = monomial_basis(space, d)
    tgt = monomial_basis(space, space.add(d, e))
    tindex = {m: i for i, m in enumerate(tgt)}
    ns, nt = len(src), len(tgt)
    M = [[f.zero] * (ns * A.ncols) for _ in range(nt * A.nrows)]
    for i, row in enumerate(A.entries):
        for j, form in enumerate(row):
            for exp, c in form.coeffs.items():
                for s_idx, mono in enumerate(src):
                    t = tuple(a + b for a, b in zip(exp, mono))
                    M[i * nt + tindex[t]][j * ns + s_idx] += c
    return Matrix._raw(M, f, ns * A.ncols)


def serre_dual_map(A: FormMatrix, d) -> Matrix:
    """Matrix of H^top(O(d))^cols -> H^top(O(d+e))^rows.

    H^top(O(d)) is the dual of H^0(O(K-d)), so the map is the transpose of
    multiplication by A^T from degree K-d-e to K-d.
    """
    space = A.space
    e = A.degree
    if e is None:
        e = space.zero_degree
    K = space.canonical
    dual_src = space.add(space.add(K, space.neg(d)), space.neg(e))
    return mult_map(A.T, dual_src).T


# -- parametrizations ---------------------------------------------------------

@dataclass(frozen=True)
class Parametrization:
    """Map target -> source space given by one form per source variable.

    The source is the space whose forms get substituted (usually P3); the
    images live on the target space and must all have the target's unit
    degree (linear, or bidegree (1, 1) on the quadric).
    """

    source: AmbientSpace
    target: AmbientSpace
    images: tuple[Form, ...]
    name: str = ""

    def __post_init__(self):
        if len(self.images) != self.source.nvars:
            raise ValueError("one image form per source variable is required")
        for f in self.images:
            if f.space != self.target:
                raise ValueError("image forms must live on the target space")
            if f.coeffs and f.degree != self.target.unit:
                raise ValueError("non-linear parametrization rejected")

    @classmethod
    def from_matrix(cls, source, target, M: Matrix, name=""):
        """z_k = sum_l M[k, l] w_l, a linear map between single-factor spaces."""
        if M.nrows != source.nvars or M.ncols != target.nvars:
            raise ValueError("parametrization matrix has the wrong shape")
        return cls(source, target, tuple(Form.linear(target, row, M.field) for row in M.rows), name)

    def matrix(self, field) -> Matrix:
        rows = []
        for f in self.images:
            row = []
            for l in range(self.target.nvars):
                exp = [0] * self.target.nvars
                exp[l] = 1
                row.append(f.coeffs.get(tuple(exp), field.zero))
            rows.append(row)
        return Matrix(rows, field)


def segre(field) -> Parametrization:
    """z1 = s0 t0, z2 = s0 t1, z3 = s1 t0, z4 = s1 t1."""
    one = field.one
    ims = []
    for s, t in ((0, 0), (0, 1), (1, 0), (1, 1)):
        exp = [0, 0, 0, 0]
        exp[s] += 1
        exp[2 + t] += 1
        ims.append(Form._raw(QUADRIC, (1, 1), {tuple(exp): one}))
    return Parametrization(P3, QUADRIC, tuple(ims), "segre")


def substitute_form(f: Form, param: Parametrization, _cache=None) -> Form:
    tgt = param.target
    out_deg = tgt.degree(tuple(x * f.space.mdeg(f.degree)[0] for x in tgt.mdeg(tgt.unit)))
    acc = Form.zero(tgt, out_deg)
    cache = _cache if _cache is not None else {}
    for exp, c in f.coeffs.items():
        term = None
        for k, e in enumerate(exp):
            if not e:
                continue
            key = (k, e)
            pw = cache.get(key)
            if pw is None:
                pw = param.images[k]
                for _ in range(e - 1):
                    pw = pw * param.images[k]
                cache[key] = pw
            term = pw if term is None else term * pw
        if term is None:
            term = Form.constant(tgt, c)
        else:
            term = term * c
        acc = acc + term
    return acc


def substitute(A: FormMatrix, param: Parametrization) -> FormMatrix:
    if A.space != param.source:
        raise ValueError("parametrization source does not match the matrix space")
    if A.space.is_product:
        raise ValueError("substitution is defined for projective-space sources")
    cache: dict = {}
    return FormMatrix(param.target, A.field,
                      [[substitute_form(f, param, cache) for f in row] for row in A.entries],
                      A.ncols)
