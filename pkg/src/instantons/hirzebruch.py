"""Extension data for bundles on the quadric Y0 = P1 x P1 (base x fibre).

A generic bundle V with c1 = 0, c2 = m is an extension

    0 -> pi^* L -> V -> sum_j O_{fibre(x_j)}(-1) -> 0,
    L = O(-a)^(r - rho) + O(-a - 1)^rho,  a = m // r,  rho = m - a r,

and the extension class is a pair of r x m matrices (left, right).  Row i
of either matrix is an element of F = k[s][z] / (z^m - s1 z^(m-1) + ...),
written in the basis 1, z, ..., z^(m-1); at numeric points x_j its values
are obtained by the Vandermonde evaluation z -> x_j.

Column blocks (for the row split (r - rho) + rho):
    [I]  cols 0 .. r-rho-1,   [III] cols r-rho .. r-1,   [V] cols r .. r+rho-1
top rows give [I], [III], [V]; bottom rows give [II], [IV], [VI].
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import QQ, Matrix, inverse, is_invertible, rank
from .cohomology import bott_dim
from .forms import P1, FormMatrix, mult_map, serre_dual_map
from .monad.serialization import canonical_dumps
from .reports import CheckReport, timed


# -- polynomials in s1..sm ---------------------------------------------------------

class Poly:
    """Sparse polynomial over Q in the variables s1..s_nv."""

    __slots__ = ("nv", "terms")

    def __init__(self, nv: int, terms=None):
        self.nv = nv
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, nv, c):
        return cls(nv, {(0,) * nv: c})

    @classmethod
    def var(cls, nv, k):
        """s_(k+1)."""
        return cls(nv, {tuple(1 if i == k else 0 for i in range(nv)): 1})

    def _lift(self, other):
        return other if isinstance(other, Poly) else Poly.const(self.nv, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.nv, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nv, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nv, out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.nv, other) if isinstance(other, (int, Fraction)) else None
        return other is not None and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, values):
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t *= Fraction(v) ** k
            total += t
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"s{i + 1}^{k}" if k > 1 else f"s{i + 1}" for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


def _evaluate(x, svals):
    return x.evaluate(svals) if isinstance(x, Poly) else Fraction(x)


def elementary_symmetric(points):
    """(s1, ..., sm) of the points."""
    c = [Fraction(1)]  # prod (z - x) in descending order: 1, -s1, s2, ...
    for x in points:
        c = [a - Fraction(x) * b for a, b in zip(c + [0], [0] + c)]
    return tuple((-1) ** k * c[k] for k in range(1, len(c)))


# -- the quotient ring F -------------------------------------------------------------

class QuotientRing:
    """k[s][z] / (z^m - s1 z^(m-1) + s2 z^(m-2) - ...), coefficients numeric or Poly."""

    def __init__(self, m: int, s=None):
        self.m = m
        self.symbolic = s is None
        self.s = tuple(Poly.var(m, k) for k in range(m)) if s is None else tuple(Fraction(x) for x in s)

    @classmethod
    def at_points(cls, points):
        return cls(len(points), elementary_symmetric(points))

    def zero(self):
        return [Fraction(0)] * self.m

    def z_times(self, v):
        """Coefficient i of z.v is v_(i-1) + (-1)^(m-i-1) s_(m-i) v_(m-1)."""
        m, top = self.m, v[-1]
        out = []
        for i in range(m):
            prev = v[i - 1] if i else 0
            sign = -1 if (m - i - 1) % 2 else 1
            out.append(prev + sign * self.s[m - i - 1] * top)
        return out

    def mul(self, a, b):
        acc = self.zero()
        cur = list(b)
        for k, ak in enumerate(a):
            if k:
                cur = self.z_times(cur)
            if ak:
                acc = [x + ak * y for x, y in zip(acc, cur)]
        return acc

    def element(self, coeffs) -> "QuotientRingElement":
        coeffs = tuple(coeffs)
        if len(coeffs) != self.m:
            raise ValueError(f"need {self.m} coefficients")
        return QuotientRingElement(self, coeffs)

    def specialize(self, points) -> "QuotientRing":
        return QuotientRing.at_points(points)


@dataclass(frozen=True)
class QuotientRingElement:
    ring: QuotientRing
    coeffs: tuple

    def __mul__(self, other):
        return QuotientRingElement(self.ring, tuple(self.ring.mul(self.coeffs, other.coeffs)))

    def value_at(self, x, svals=None):
        """t(x): substitute z = x (s evaluated at svals when symbolic)."""
        total = Fraction(0)
        for k, c in enumerate(self.coeffs):
            total += _evaluate(c, svals) * Fraction(x) ** k
        return total

    def specialize(self, points) -> "QuotientRingElement":
        svals = elementary_symmetric(points)
        R = QuotientRing(len(points), svals)
        return QuotientRingElement(R, tuple(_evaluate(c, svals) for c in self.coeffs))

    def is_invertible_at(self, points) -> bool:
        svals = elementary_symmetric(points)
        return all(self.value_at(x, svals) != 0 for x in points)


# -- extension data ---------------------------------------------------------------------

class HirzebruchError(ValueError):
    pass


def generic_splitting(m: int, r: int):
    if r < 1 or m < 0:
        raise ValueError("need r >= 1, m >= 0")
    a = m // r
    return a, m - a * r


def term1(r1: int, n1: int, r2: int, n2: int):
    """(r'(n'' - r'') + r'' n', precondition n'' >= r'' holds)."""
    return r1 * (n2 - r2) + r2 * n1, n2 >= r2


@dataclass(frozen=True)
class ExtensionData:
    m: int
    r: int
    points: tuple | None  # None for symbolic data over k[s1..sm]
    left: tuple  # r rows of m coefficients
    right: tuple

    def __post_init__(self):
        if not (self.m >= self.r >= 2):
            raise HirzebruchError(f"need m >= r >= 2, got m={self.m}, r={self.r}")
        for M in (self.left, self.right):
            if len(M) != self.r or any(len(row) != self.m for row in M):
                raise HirzebruchError("left/right must be r x m")
        if self.points is not None:
            pts = tuple(Fraction(x) for x in self.points)
            if len(pts) != self.m:
                raise HirzebruchError("need m points")
            if len(set(pts)) != self.m or any(x == 0 for x in pts):
                raise HirzebruchError("points must be distinct and nonzero")
            object.__setattr__(self, "points", pts)
        conv = (lambda x: x) if self.points is None else Fraction
        object.__setattr__(self, "left", tuple(tuple(conv(x) for x in row) for row in self.left))
        object.__setattr__(self, "right", tuple(tuple(conv(x) for x in row) for row in self.right))

    @property
    def symbolic(self) -> bool:
        return self.points is None

    @property
    def splitting(self):
        return generic_splitting(self.m, self.r)

    @property
    def ring(self) -> QuotientRing:
        return QuotientRing(self.m) if self.symbolic else QuotientRing.at_points(self.points)

    def specialize(self, points) -> "ExtensionData":
        """Evaluate symbolic data at s = s(points)."""
        if not self.symbolic:
            raise HirzebruchError("data are already numeric")
        svals = elementary_symmetric(points)
        ev = lambda M: tuple(tuple(_evaluate(x, svals) for x in row) for row in M)
        return ExtensionData(self.m, self.r, tuple(points), ev(self.left), ev(self.right))

    def values(self, side: str = "left") -> Matrix:
        """r x m matrix of evaluations at the points (column j at x_j)."""
        if self.symbolic:
            raise HirzebruchError("numeric data required")
        M = self.left if side == "left" else self.right
        V = Matrix([[x ** k for x in self.points] for k in range(self.m)], QQ)
        return Matrix(M, QQ) @ V

    def block(self, name: str, side: str = "left"):
        """[I] .. [VI] and the shifted blocks [II'], [IV'], [VI'] as row lists."""
        r = self.r
        _, rho = self.splitting
        M = self.left if side == "left" else self.right
        top, bottom = M[:r - rho], M[r - rho:]
        cols = {"I": range(0, r - rho), "III": range(r - rho, r), "V": range(r, r + rho)}
        pair = {"I": ("I", top), "II": ("I", bottom), "III": ("III", top), "IV": ("III", bottom),
                "V": ("V", top), "VI": ("V", bottom)}
        shifted = name.endswith("'")
        key = name.rstrip("'")
        rng, rows = pair[key]
        if shifted:
            if key not in ("II", "IV", "VI"):
                raise KeyError(name)
            R = self.ring
            rows = [R.z_times(list(v)) for v in bottom]
        return [[row[c] for c in cols[rng]] for row in rows]

    def __eq__(self, other):
        return (isinstance(other, ExtensionData) and (self.m, self.r, self.points) ==
                (other.m, other.r, other.points) and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash((self.m, self.r, self.points, self.left, self.right))


@dataclass(frozen=True)
class AutLElement:
    """w = [[A, H0 + z H1], [0, B]] in Aut(L); H0, H1 are (r - rho) x rho."""

    A: Matrix
    B: Matrix
    H0: Matrix
    H1: Matrix

    def __post_init__(self):
        p, q = self.A.nrows, self.B.nrows
        if self.A.shape != (p, p) or self.B.shape != (q, q):
            raise HirzebruchError("A and B must be square")
        for H in (self.H0, self.H1):
            if H.shape != (p, q):
                raise HirzebruchError(f"H blocks must be {(p, q)}")
        if not (is_invertible(self.A) if p else True) or not (is_invertible(self.B) if q else True):
            raise HirzebruchError("A and B must be invertible")

    @classmethod
    def identity(cls, r, rho):
        return cls(Matrix.identity(r - rho, QQ), Matrix.identity(rho, QQ),
                   Matrix.zeros(r - rho, rho, QQ), Matrix.zeros(r - rho, rho, QQ))

    def __matmul__(self, other: "AutLElement") -> "AutLElement":
        return AutLElement(self.A @ other.A, self.B @ other.B,
                           self.A @ other.H0 + self.H0 @ other.B,
                           self.A @ other.H1 + self.H1 @ other.B)

    def scalar(self, c):
        return AutLElement(self.A.scale(c), self.B.scale(c), self.H0.scale(c), self.H1.scale(c))


def _lin(M: Matrix, rows):
    """M . rows for rows of ring coefficients."""
    out = []
    for i in range(M.nrows):
        acc = [0] * (len(rows[0]) if rows else 0)
        for k, row in enumerate(rows):
            c = M[i, k]
            if c:
                acc = [a + c * b for a, b in zip(acc, row)]
        out.append(acc)
    return out


def _act_side(w: AutLElement, M, R: QuotientRing, rho: int):
    r = len(M)
    top, bottom = [list(x) for x in M[:r - rho]], [list(x) for x in M[r - rho:]]
    zb = [R.z_times(v) for v in bottom]
    new_top = top
    if rho and r - rho:
        new_top = [[a + b + c for a, b, c in zip(t, h0, h1)]
                   for t, h0, h1 in zip(_lin(w.A, top), _lin(w.H0, bottom), _lin(w.H1, zb))]
    elif r - rho:
        new_top = _lin(w.A, top)
    new_bottom = _lin(w.B, bottom) if rho else []
    return tuple(tuple(row) for row in new_top + new_bottom)


def aut_action(w: AutLElement, e: ExtensionData) -> ExtensionData:
    """top' = A top + H0 bottom + H1 (z bottom); bottom' = B bottom (both sides)."""
    a, rho = e.splitting
    if w.A.nrows != e.r - rho or w.B.nrows != rho:
        raise HirzebruchError("automorphism does not match the splitting type")
    R = e.ring
    return ExtensionData(e.m, e.r, e.points, _act_side(w, e.left, R, rho),
                         _act_side(w, e.right, R, rho))


def iv_prime(e: ExtensionData) -> Matrix:
    """[IV'] of the left data (rho x rho)."""
    if e.symbolic:
        raise HirzebruchError("numeric data required")
    return Matrix(e.block("IV'"), QQ, e.splitting[1])


def normalize_u1_slice(e: ExtensionData):
    """(w, w x e) with w in U1* and [III](w x e) = 0; H1 = -[III] [IV']^-1."""
    a, rho = e.splitting
    if rho == 0:
        return AutLElement.identity(e.r, 0), e
    IVp = iv_prime(e)
    if not is_invertible(IVp):
        raise HirzebruchError("non-generic extension: [IV'] is singular")
    III = Matrix(e.block("III"), QQ, rho)
    H1 = -(III @ inverse(IVp))
    w = AutLElement(Matrix.identity(e.r - rho, QQ), Matrix.identity(rho, QQ),
                    Matrix.zeros(e.r - rho, rho, QQ), H1)
    return w, aut_action(w, e)


def t_action(t: QuotientRingElement, e: ExtensionData) -> ExtensionData:
    """Multiply every row (an element of F) by t."""
    R = e.ring
    if not e.symbolic:
        if not t.is_invertible_at(e.points):
            raise HirzebruchError("t is not invertible: it vanishes at some x_j")
    elif not t_generically_invertible(t):
        raise HirzebruchError("t is not invertible: its resultant with p(z) vanishes")
    mul = lambda M: tuple(tuple(R.mul(list(t.coeffs), list(row))) for row in M)
    return ExtensionData(e.m, e.r, e.points, mul(e.left), mul(e.right))


def t_generically_invertible(t: QuotientRingElement, tries: int = 8) -> bool:
    """Res(p, t) = prod_j t(x_j) is not the zero polynomial in s.

    A single specialization with a nonzero value certifies this exactly.
    """
    m = t.ring.m
    for k in range(tries):
        if t.is_invertible_at(tuple(k * m + j + 1 for j in range(m))):
            return True
    return False


def with_unit_iv_prime(e: ExtensionData) -> ExtensionData:
    """Replace the bottom left rows so that v_(m-1) = 0 and [IV'] = 1."""
    a, rho = e.splitting
    r, m = e.r, e.m
    bottom = []
    for k in range(rho):
        row = [Fraction(0)] * m
        row[r - rho - 1 + k] = Fraction(1)
        # keep the other free coefficients, away from v_(m-1) and the [IV'] columns
        for c in range(m - 1):
            if not (r - rho - 1 <= c <= r - 2):
                row[c] = e.left[r - rho + k][c]
        bottom.append(tuple(row))
    return ExtensionData(m, r, e.points, e.left[:r - rho] + tuple(bottom), e.right)


def diagonal_scalar(c, e: ExtensionData):
    """The scalar diagonal: (c . 1 in Aut(L), c^-1 in T), acting trivially on e."""
    a, rho = e.splitting
    c = Fraction(c)
    w = AutLElement.identity(e.r, rho).scalar(c)
    t = QuotientRingElement(e.ring, tuple([1 / c] + [Fraction(0)] * (e.m - 1)))
    return w, t


# -- random data ----------------------------------------------------------------------------

def random_points(m, rng, height=None):
    height = height or max(5, 2 * m)
    pts = set()
    while len(pts) < m:
        x = rng.randint(-height, height)
        if x:
            pts.add(x)
    return tuple(sorted(pts))


def random_extension_data(r: int, m: int, rng: random.Random, height: int = 5) -> ExtensionData:
    pts = random_points(m, rng)
    M = lambda: tuple(tuple(rng.randint(-height, height) for _ in range(m)) for _ in range(r))
    return ExtensionData(m, r, pts, M(), M())


def random_symbolic_data(r: int, m: int, rng: random.Random, height: int = 3) -> ExtensionData:
    def entry():
        # a random affine-linear polynomial in s1..sm
        p = Poly.const(m, rng.randint(-height, height))
        for k in range(m):
            p = p + Poly.var(m, k) * rng.randint(-height, height)
        return p
    M = lambda: tuple(tuple(entry() for _ in range(m)) for _ in range(r))
    return ExtensionData(m, r, None, M(), M())


def _rand_invertible(k, rng, height=3):
    while True:
        M = Matrix([[rng.randint(-height, height) for _ in range(k)] for _ in range(k)], QQ)
        if k == 0 or is_invertible(M):
            return M


def random_aut(r: int, m: int, rng: random.Random) -> AutLElement:
    _, rho = generic_splitting(m, r)
    H = lambda: Matrix([[rng.randint(-3, 3) for _ in range(rho)] for _ in range(r - rho)], QQ, rho)
    return AutLElement(_rand_invertible(r - rho, rng), _rand_invertible(rho, rng), H(), H())


def random_t(ring: QuotientRing, rng: random.Random, points=None, symbolic_height: int = 0):
    while True:
        if ring.symbolic:
            coeffs = []
            for _ in range(ring.m):
                p = Poly.const(ring.m, rng.randint(-3, 3))
                for k in range(ring.m if symbolic_height else 0):
                    p = p + Poly.var(ring.m, k) * rng.randint(-symbolic_height, symbolic_height)
                coeffs.append(p)
        else:
            coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(ring.m)]
        t = QuotientRingElement(ring, tuple(coeffs))
        if points is None or t.is_invertible_at(points):
            return t


# -- the bundle on the quadric ----------------------------------------------------------------

@dataclass(frozen=True)
class QuadricBundlePresentation:
    data: ExtensionData
    degrees: tuple  # base degrees of the summands of L^dual
    pairs: tuple  # per j: (left values, right values), each a length-r tuple

    @property
    def r(self):
        return self.data.r

    @property
    def m(self):
        return self.data.m


def build_quadric_bundle(data: ExtensionData) -> QuadricBundlePresentation:
    if data.symbolic:
        raise HirzebruchError("numeric data required to build a bundle")
    a, rho = data.splitting
    L, R = data.values("left"), data.values("right")
    pairs = []
    for j in range(data.m):
        lj, rj = L.column(j), R.column(j)
        if not any(lj) and not any(rj):
            raise HirzebruchError(f"zero evaluation pair at j={j + 1}")
        if rank(Matrix([list(lj), list(rj)], QQ)) < 2:
            raise HirzebruchError(f"evaluation at j={j + 1} is not surjective "
                                  "(left and right values are proportional)")
        pairs.append((tuple(lj), tuple(rj)))
    degrees = (a,) * (data.r - rho) + (a + 1,) * rho
    return QuadricBundlePresentation(data, degrees, tuple(pairs))


def _fibre_form(l, r):
    return FormMatrix.from_linear(P1, QQ, [[[l, r]]])


def dual_cohomology(pres: QuadricBundlePresentation, k):
    """(h0, h1, h2) of V^dual(k1, k2) from 0 -> V^dual -> pi^* L^dual -> S^* -> 0."""
    k1, k2 = k
    m, r = pres.m, pres.r
    pts = pres.data.points
    e = [d + k1 for d in pres.degrees]
    h0b = [bott_dim(P1, 0, x) for x in e]
    h1b = [bott_dim(P1, 1, x) for x in e]
    h0f, h1f = bott_dim(P1, 0, k2), bott_dim(P1, 1, k2)
    t0f, t1f = bott_dim(P1, 0, k2 + 1), bott_dim(P1, 1, k2 + 1)

    maps0 = [[mult_map(_fibre_form(pres.pairs[j][0][i], pres.pairs[j][1][i]), k2) for i in range(r)]
             for j in range(m)]
    maps1 = [[serre_dual_map(_fibre_form(pres.pairs[j][0][i], pres.pairs[j][1][i]), k2)
              for i in range(r)] for j in range(m)]

    def assemble(maps, src, tgt):
        rows = [[Fraction(0)] * sum(h0b[i] * src for i in range(r)) for _ in range(m * tgt)]
        col = 0
        for i in range(r):
            for p in range(h0b[i]):
                for j in range(m):
                    scale = pts[j] ** p
                    B = maps[j][i]
                    for a in range(tgt):
                        for b in range(src):
                            if B[a, b]:
                                rows[j * tgt + a][col + b] += scale * B[a, b]
                col += src
        return Matrix(rows, QQ, col) if rows else Matrix.zeros(0, col, QQ)

    ev0 = assemble(maps0, h0f, t0f)
    ev1 = assemble(maps1, h1f, t1f)
    r0 = rank(ev0)
    r1 = rank(ev1)
    H0 = sum(x * h0f for x in h0b)
    H1 = sum(h0b[i] * h1f + h1b[i] * h0f for i in range(r))
    H2 = sum(x * h1f for x in h1b)
    h0 = H0 - r0
    h1 = (m * t0f - r0) + (H1 - r1)
    h2 = (m * t1f - r1) + H2
    return h0, h1, h2


def bundle_cohomology(pres: QuadricBundlePresentation, k=(0, 0)):
    """(h0, h1, h2) of V(k1, k2), by Serre duality with canonical class (-2, -2)."""
    k1, k2 = k
    d = dual_cohomology(pres, (-2 - k1, -2 - k2))
    return d[2], d[1], d[0]


def cohomology_table(pres: QuadricBundlePresentation, twists):
    return {tuple(k): bundle_cohomology(pres, k) for k in twists}


def riemann_roch_check(pres: QuadricBundlePresentation) -> CheckReport:
    rep = CheckReport("riemann_roch_quadric", inputs={"r": pres.r, "m": pres.m})
    with timed(rep):
        h0, h1, h2 = bundle_cohomology(pres)
        rep.computed["h(V)"] = [h0, h1, h2]
        rep.expect("h1(V) - h0(V)", pres.m - pres.r, h1 - h0)
        rep.expect("h2(V)", 0, h2)
        # Serre duality: h2(V) = h0(V^dual(-2, -2))
        rep.expect("h2(V) vs h0(V^dual(-2,-2))", dual_cohomology(pres, (-2, -2))[0], h2)
        rep.expect("chi(V)", pres.r - pres.m, h0 - h1 + h2)
    return rep


def splitting_profile(pres: QuadricBundlePresentation, ks):
    """h0(V(k, 0)) for k in ks, and the values predicted by pi_* V = L."""
    a, rho = pres.data.splitting
    got = [bundle_cohomology(pres, (k, 0))[0] for k in ks]
    want = [(pres.r - rho) * max(0, k - a + 1) + rho * max(0, k - a) for k in ks]
    return got, want


# -- JSON ------------------------------------------------------------------------------------

def extension_to_dict(e: ExtensionData) -> dict:
    if e.symbolic:
        raise HirzebruchError("symbolic data have no file format")
    fmt = QQ.format
    return {"m": e.m, "r": e.r, "points": [fmt(x) for x in e.points],
            "left": [[fmt(x) for x in row] for row in e.left],
            "right": [[fmt(x) for x in row] for row in e.right]}


def extension_from_dict(d: dict) -> ExtensionData:
    try:
        parse = QQ.parse
        return ExtensionData(int(d["m"]), int(d["r"]), tuple(parse(x) for x in d["points"]),
                             tuple(tuple(parse(x) for x in row) for row in d["left"]),
                             tuple(tuple(parse(x) for x in row) for row in d["right"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed extension file: {exc!r}") from exc


def dumps_extension(e: ExtensionData) -> str:
    return canonical_dumps(extension_to_dict(e))


def loads_extension(text: str) -> ExtensionData:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return extension_from_dict(obj)


def aut_to_dict(w: AutLElement) -> dict:
    return {"A": w.A.to_strings(), "B": w.B.to_strings(), "H0": w.H0.to_strings(),
            "H1": w.H1.to_strings()}


def aut_from_dict(d: dict, r: int, rho: int) -> AutLElement:
    def mat(rows, nr, nc):
        if nr == 0 or nc == 0:
            return Matrix.zeros(nr, nc, QQ)
        return Matrix.from_strings(rows, QQ)
    return AutLElement(mat(d["A"], r - rho, r - rho), mat(d["B"], rho, rho),
                       mat(d["H0"], r - rho, rho), mat(d["H1"], r - rho, rho))
