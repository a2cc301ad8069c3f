"""Real structure, quaternionic constraints and ADHM data.

The real structure on P3 is rho(z1, z2, z3, z4) = (conj z2, -conj z1,
conj z4, -conj z3).  On linear forms it induces f -> f^rho with
f^rho(z) = conj(f(rho(conj z))), i.e. coefficients (c1, c2, c3, c4) ->
(-conj c2, conj c1, -conj c4, conj c3); applying it twice gives -f.

ADHM data are four pairs of matrices (L_left^(j), L_right^(j)) giving the
monad eps = sum_j L_left^(j) z_j, q = sum_j L_right^(j) z_j.  The
quaternionic constraints say exactly that q = -(eps^rho)^T.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .algebra import DEFAULT_PRIME, QQI, Gaussian, Matrix
from .forms import P3, Form, FormMatrix
from .monad.core import Monad
from .monad.isomorphism import monad_isomorphic
from .monad.restriction import is_trivializing, line_through, plane_from_covector, restrict
from .monad.serialization import canonical_dumps
from .monad.validation import Item, ValidationReport, validate

_UNITS = [tuple(1 if k == j else 0 for k in range(4)) for j in range(4)]


# -- the involution ------------------------------------------------------------

def rho_point(z):
    z = [QQI(x) for x in z]
    if not any(z):
        raise ValueError("rho is defined on nonzero vectors")
    c = [x.conjugate() for x in z]
    return [c[1], -c[0], c[3], -c[2]]


def rho_covector(h):
    """Covector of rho(H) for the plane H = {h . z = 0}."""
    c = [QQI(x).conjugate() for x in h]
    return [-c[1], c[0], -c[3], c[2]]


def _rho_form(f: Form) -> Form:
    c = [QQI(f.coeffs.get(u, 0)).conjugate() for u in _UNITS]
    return Form.linear(P3, [-c[1], c[0], -c[3], c[2]], QQI)


def rho_twist(M: FormMatrix) -> FormMatrix:
    if M.space != P3:
        raise ValueError("rho acts on forms over P3")
    return M.map_entries(_rho_form)


def rho_pullback(m: Monad) -> Monad:
    """Conjugate pullback along rho followed by dualization."""
    if m.field != QQI:
        raise ValueError("the real structure needs Gaussian rational data (field Qi)")
    return Monad(rho_twist(m.q).T, rho_twist(m.epsilon).T)


# -- ADHM data -------------------------------------------------------------------

@dataclass(frozen=True)
class ADHMData:
    n: int
    r: int
    left: tuple  # four (r + 2n) x n matrices over Q(i)
    right: tuple  # four n x (r + 2n) matrices over Q(i)

    def __post_init__(self):
        c = self.r + 2 * self.n
        if len(self.left) != 4 or len(self.right) != 4:
            raise ValueError("ADHM data need four matrices on each side")
        for L in self.left:
            if L.shape != (c, self.n):
                raise ValueError(f"left matrix of shape {L.shape}, expected {(c, self.n)}")
        for R in self.right:
            if R.shape != (self.n, c):
                raise ValueError(f"right matrix of shape {R.shape}, expected {(self.n, c)}")

    def epsilon(self) -> FormMatrix:
        return _assemble(self.left)

    def q(self) -> FormMatrix:
        return _assemble(self.right)


def _assemble(mats) -> FormMatrix:
    rows, cols = mats[0].shape
    return FormMatrix.from_linear(P3, QQI, [[[M[i, j] for M in mats] for j in range(cols)]
                                            for i in range(rows)])


def impose_quaternionic(left, r: int | None = None) -> ADHMData:
    """Right-hand matrices from the adjoint relations.

    (L1)* = -R2, (L2)* = R1, (L3)* = -R4, (L4)* = R3.
    """
    left = tuple(M.change_field(QQI) if M.field != QQI else M for M in left)
    c, n = left[0].shape
    right = (left[1].H, -left[0].H, left[3].H, -left[2].H)
    return ADHMData(n, c - 2 * n if r is None else r, left, right)


def recover_left(right) -> tuple:
    """Inverse of the relations: the left matrices determined by the right ones."""
    return (-right[1].H, right[0].H, -right[3].H, right[2].H)


def check_constraints(d: ADHMData) -> bool:
    L, R = d.left, d.right
    return (L[0].H == -R[1] and L[1].H == R[0] and L[2].H == -R[3] and L[3].H == R[2])


def adhm_to_monad(d: ADHMData, validate_result: bool = True, *, trials: int = 64, seed: int = 0):
    """(Monad, ValidationReport).  The monad is None when the data are rejected."""
    rep = ValidationReport()
    rep.items.append(Item("quaternionic_constraints", check_constraints(d)))
    m = Monad(d.epsilon(), d.q())
    if validate_result:
        sub = validate(m, trials, seed)
        for it in sub.items:
            if it.name == "complex":
                it = Item("adhm_equations", it.ok, it.detail)
            rep.items.append(it)
    else:
        ok = m.composite().is_zero()
        rep.items.append(Item("adhm_equations", ok, "q.epsilon = 0 exactly" if ok else "q.epsilon != 0"))
    return (m if rep.ok else None), rep


# -- explicit solutions ------------------------------------------------------------

def _rand_nonzero(rng, h=5):
    while True:
        x = rng.randint(-h, h)
        if x:
            return x


def thooft_data(n: int, rng: random.Random) -> ADHMData:
    """Real 't Hooft-type data of rank 2 and charge n (rational entries).

    Block 0 carries the two framing directions and block j + 1 the j-th
    column; distinct points (a_j, b_j) and nonzero weights lambda_j make the
    fibre ranks maximal.
    """
    c = 2 + 2 * n
    pts = set()
    while len(pts) < n:
        pts.add((rng.randint(-5, 5), rng.randint(-5, 5)))
    pts = sorted(pts)
    rng.shuffle(pts)
    L = [[[0] * n for _ in range(c)] for _ in range(4)]
    for j, (a, b) in enumerate(pts):
        lam = _rand_nonzero(rng)
        u, v = 2 * (j + 1), 2 * (j + 1) + 1
        L[0][u][j] = -1
        L[1][v][j] = -1
        L[2][0][j], L[2][u][j], L[2][v][j] = lam, a, b
        L[3][1][j], L[3][u][j], L[3][v][j] = lam, -b, a
    return impose_quaternionic([Matrix(M, QQI) for M in L])


def _J(M: Matrix) -> Matrix:
    """Columnwise v -> Omega conj(v), pairs (v_2k, v_2k+1) -> (-conj v_2k+1, conj v_2k)."""
    rows = []
    for k in range(0, M.nrows, 2):
        rows.append([-x.conjugate() for x in M.rows[k + 1]])
        rows.append([x.conjugate() for x in M.rows[k]])
    return Matrix(rows, QQI, M.ncols)


def quaternionic_charge_one(seed: int = 0, *, height: int = 3, max_tries: int = 20):
    """Solved rank-2 charge-1 data: L2 = J L1, L4 = J L3 with random L1, L3.

    Returns (ADHMData, Monad, ValidationReport) for the first draw that
    passes full validation.
    """
    for attempt in range(max_tries):
        rng = random.Random(f"charge-one:{seed}:{attempt}")
        gauss = lambda: Gaussian(rng.randint(-height, height), rng.randint(-height, height))
        L1 = Matrix([[gauss()] for _ in range(4)], QQI)
        L3 = Matrix([[gauss()] for _ in range(4)], QQI)
        d = impose_quaternionic([L1, _J(L1), L3, _J(L3)])
        m, rep = adhm_to_monad(d, seed=attempt)
        if m is not None:
            return d, m, rep
    raise RuntimeError(f"no valid charge-one data after {max_tries} draws")


# -- twistor lines ------------------------------------------------------------------

@dataclass(frozen=True)
class RealLine:
    point: tuple

    @property
    def image(self):
        return tuple(rho_point(self.point))

    def parametrization(self):
        return line_through(self.point, self.image, QQI)

    def contains(self, w) -> bool:
        M = Matrix([list(self.point), list(self.image), [QQI(x) for x in w]], QQI)
        from .algebra import rank
        return rank(M) == 2


def twistor_line(z) -> RealLine:
    z = tuple(QQI(x) for x in z)
    line = RealLine(z)
    from .algebra import rank
    if rank(Matrix([list(z), list(line.image)], QQI)) < 2:  # pragma: no cover - rho has no fixed points
        raise AssertionError("rho fixed a point")
    for s, t in ((1, 1), (2, -1), (1, Gaussian(0, 1))):
        w = [QQI(s) * a + QQI(t) * b for a, b in zip(z, line.image)]
        if not line.contains(rho_point(w)):  # pragma: no cover
            raise AssertionError("twistor line is not rho-invariant")
    return line


def random_gaussian_point(rng, height: int = 3):
    while True:
        z = [Gaussian(rng.randint(-height, height), rng.randint(-height, height)) for _ in range(4)]
        if any(z):
            return z


def real_line_exceptions(m: Monad, trials: int = 20, seed: int = 0, prime: int = DEFAULT_PRIME):
    """Twistor lines (as points z) on which m is not trivial, out of ``trials``."""
    rng = random.Random(f"twistor:{seed}")
    bad = []
    for _ in range(trials):
        line = twistor_line(random_gaussian_point(rng))
        param = line.parametrization()
        # a modular zero is rigorous; a modular nonzero is confirmed exactly
        if not is_trivializing(m, param, prime) and not is_trivializing(m, param):
            bad.append(line.point)
    return bad


def atiyah_pair(m: Monad, h=(0, 0, 0, 1)) -> bool:
    """Restrictions of m and of rho~* m to D = rho(H) are isomorphic."""
    D = plane_from_covector(rho_covector(h), QQI)
    return monad_isomorphic(restrict(m, D), restrict(rho_pullback(m), D)) is not None


def check_real_line_trivial(m: Monad, trials: int = 20, seed: int = 0):
    """Report on trivial restrictions to sampled twistor lines.

    Exceptions are listed; they make the report "nongeneric" rather than a
    failure, since a monad without real structure may jump on real lines.
    """
    from .reports import NONGENERIC, CheckReport, monad_digest, timed
    rep = CheckReport("real_line_trivial", inputs={"r": m.r, "n": m.n, "seed": seed,
                                                   "digest": monad_digest(m), "trials": trials},
                      field=m.field.tag)
    with timed(rep):
        bad = real_line_exceptions(m, trials, seed)
        rep.computed["exceptions"] = [[QQI.format(x) for x in z] for z in bad]
        rep.computed["trivial"] = trials - len(bad)
        rep.expected["trivial"] = trials
        if bad:
            rep.status = NONGENERIC
            rep.notes.append(f"{len(bad)} of {trials} real lines are jumping lines")
    return rep


def check_atiyah_pair(m: Monad, h=(0, 0, 0, 1)):
    from .reports import CheckReport, monad_digest, timed
    rep = CheckReport("atiyah_pair", inputs={"r": m.r, "n": m.n, "digest": monad_digest(m),
                                             "H": [QQI.format(QQI(x)) for x in h]},
                      field=m.field.tag)
    with timed(rep):
        rep.expect("F_D isomorphic to (rho~* F)_D", True, atiyah_pair(m, h))
    return rep


# -- JSON --------------------------------------------------------------------------

def adhm_to_dict(d: ADHMData) -> dict:
    return {"field": "Qi", "r": d.r, "n": d.n,
            "left": [M.to_strings() for M in d.left],
            "right": [M.to_strings() for M in d.right]}


def adhm_from_dict(obj: dict) -> ADHMData:
    try:
        if obj["field"] != "Qi":
            raise ValueError("ADHM data live over Qi")
        left = tuple(Matrix.from_strings(M, QQI) for M in obj["left"])
        right = tuple(Matrix.from_strings(M, QQI) for M in obj["right"])
        n, r = int(obj["n"]), int(obj["r"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed ADHM file: {exc!r}") from exc
    c = r + 2 * n
    # empty matrices lose their column count in the row-list format
    left = tuple(M if M.nrows else Matrix.zeros(c, n, QQI) for M in left)
    return ADHMData(n, r, left, right)


def dumps_adhm(d: ADHMData) -> str:
    return canonical_dumps(adhm_to_dict(d))


def loads_adhm(text: str) -> ADHMData:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return adhm_from_dict(obj)
