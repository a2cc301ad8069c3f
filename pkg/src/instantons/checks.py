"""Checkers: each verifies one computable consequence of instanton theory on a monad.

Every checker returns a :class:`CheckReport`; exact integer comparisons only.
Genericity failures (non-simple samples, jumping restrictions) are reported
with status "nongeneric" rather than "fail".
"""

from __future__ import annotations

from .algebra import Matrix, PrimeField, rank
from .cohomology import LineBundleComplex, cech_hypercohomology, lbc_tensor, lbc_twist, monad_cohomology
from .forms import P3, Form, FormMatrix, monomial_basis
from .monad import (
    Monad, change_coordinates, coordinate_plane, end_complex, find_trivializing_line,
    line_coordinate_change, line_through, restrict, sample_instanton, tensor_complex,
)
from .reports import FAIL, NONGENERIC, SKIPPED, CheckReport, monad_digest, timed

TENSOR_BOUND = 10


def _report(name, m: Monad, seed=None, **inputs) -> CheckReport:
    inp = {"r": m.r, "n": m.n}
    if seed is not None:
        inp["seed"] = seed
    inp["digest"] = monad_digest(m)
    inp.update(inputs)
    return CheckReport(name, inputs=inp, field=m.field.tag,
                       prime=m.field.p if isinstance(m.field, PrimeField) else None)


def _hyper(C, bound=None, prime=None):
    return cech_hypercohomology(C, bound, prime=prime)


def end_h(m: Monad, k=0, bound=None, prime=None):
    """(h0, h1, h2, h3) of End F(k) through the Cech engine."""
    res = _hyper(lbc_twist(end_complex(m), k), bound, prime)
    top = m.space.dim
    return res.vector(0, top), res.bound


# -- dimension table and Riemann-Roch ------------------------------------------------

def check_dimension_table(m: Monad, seed=None) -> CheckReport:
    rep = _report("dimension_table", m, seed)
    with timed(rep):
        n = m.n
        h1, h2, h3 = (monad_cohomology(m, k) for k in (-1, -2, -3))
        rep.expect("h0(F(-1))", 0, h1[0])
        rep.expect("h1(F(-1))", n, h1[1])
        rep.expect("h1(F(-2))", 0, h2[1])
        rep.expect("h2(F(-2))", 0, h2[2])
        rep.expect("h2(F(-3))", n, h3[2])
    return rep


def check_riemann_roch(m: Monad, seed=None) -> CheckReport:
    rep = _report("riemann_roch", m, seed)
    with timed(rep):
        h = monad_cohomology(m, 0)
        rep.computed["h(F)"] = list(h)
        if h[0] or h[2]:
            rep.status = NONGENERIC
            rep.notes.append("h0(F) or h2(F) nonzero: sample is not generic")
            return rep
        rep.expect("h1(F)", 2 * m.n - m.r, h[1])
    return rep


def check_instanton_condition(m: Monad, seed=None) -> CheckReport:
    rep = _report("instanton_condition", m, seed)
    with timed(rep):
        if not m.composite().is_zero():
            rep.status = SKIPPED
            rep.notes.append("precondition: q.epsilon != 0, not a monad")
            return rep
        h = monad_cohomology(m, -2)
        rep.expect("h1(F(-2))", 0, h[1])
        rep.expect("h2(F(-2))", 0, h[2])
    return rep


# -- tensor products and End -----------------------------------------------------------

def check_tensor_vanishing(m1: Monad, m2: Monad, *, bound: int = TENSOR_BOUND, prime=None,
                           seed=None) -> CheckReport:
    rep = _report("tensor_vanishing", m1, seed, r2=m2.r, n2=m2.n, digest2=monad_digest(m2))
    rep.bound, rep.prime = bound, prime
    with timed(rep):
        C = tensor_complex(m1, m2)
        h2 = _hyper(lbc_twist(C, -2), bound, prime)
        h1 = _hyper(lbc_twist(C, -1), bound, prime)
        rep.expect("h1((F*G)(-2))", 0, h2[1])
        rep.expect("h2((F*G)(-2))", 0, h2[2])
        rep.expect("h1((F*G)(-1))", m2.r * m1.n + m1.r * m2.n, h1[1])
        # extremities V_F (x) H^2(G(-3)) and H^2(F(-3)) (x) V_G, each n_F n_G
        rep.computed["extremities"] = [monad_cohomology(m1, -1)[1] * monad_cohomology(m2, -3)[2],
                                       monad_cohomology(m1, -3)[2] * monad_cohomology(m2, -1)[1]]
        rep.expected["extremities"] = [m1.n * m2.n] * 2
        if rep.computed["extremities"] != rep.expected["extremities"]:
            rep.status = FAIL
    return rep


def check_end_dims(m: Monad, *, bound=None, prime=None, seed=None) -> CheckReport:
    rep = _report("end_dims", m, seed)
    rep.prime = prime
    with timed(rep):
        h0, b = end_h(m, 0, bound, prime)
        rep.bound = b
        rep.computed["h(End F)"] = list(h0)
        if h0[0] != 1:
            rep.status = NONGENERIC
            rep.notes.append(f"h0(End F) = {h0[0]}: sample is not simple")
            return rep
        hm2, _ = end_h(m, -2, bound, prime)
        rep.expect("h1(End F(-2))", 0, hm2[1])
        rep.expect("h2(End F(-2))", 0, hm2[2])
        rep.expect("h2(End F)", 0, h0[2])
        rep.expect("h1(End F)", 4 * m.r * m.n - m.r ** 2 + 1, h0[1])
    return rep


# -- tangent space -------------------------------------------------------------------------

_UNITS = [tuple(1 if k == j else 0 for k in range(4)) for j in range(4)]
_Q2 = {e: i for i, e in enumerate(monomial_basis(P3, 2))}


def linearization(m: Monad) -> Matrix:
    """Matrix of (d eps, d q) -> q . d eps + d q . eps (8n(r+2n) columns, 10n^2 rows)."""
    n, c = m.n, m.rank_middle
    f = m.field
    z = f.zero
    ncols = 8 * n * c
    rows = [[z] * ncols for _ in range(10 * n * n)]
    lin = lambda F: [F.coeffs.get(u, z) for u in _UNITS]
    eps = [[lin(x) for x in row] for row in m.epsilon.entries]
    q = [[lin(x) for x in row] for row in m.q.entries]

    def mono(k, l):
        return _Q2[tuple(a + b for a, b in zip(_UNITS[k], _UNITS[l]))]

    for i in range(n):
        for j in range(n):
            base = 10 * (i * n + j)
            for a in range(c):
                for k in range(4):
                    col_e = 4 * (a * n + j) + k  # d eps[a, j], variable k
                    col_q = 4 * n * c + 4 * (i * c + a) + k  # d q[i, a], variable k
                    for l in range(4):
                        if q[i][a][l]:
                            rows[base + mono(k, l)][col_e] += q[i][a][l]
                        if eps[a][j][l]:
                            rows[base + mono(k, l)][col_q] += eps[a][j][l]
    return Matrix._raw(rows, f, ncols)


def check_tangent_dimension(m: Monad, *, h1_end: int | None = None, seed=None) -> CheckReport:
    rep = _report("tangent_dimension", m, seed)
    with timed(rep):
        r, n = m.r, m.n
        L = linearization(m)
        nullity = L.ncols - rank(L)
        rep.expect("nullity", 8 * r * n + 6 * n * n, nullity)
        group = 2 * n * n + (r + 2 * n) ** 2 - 1
        rep.computed["group_dim"] = group
        if h1_end is None:
            h1_end = end_h(m, 0)[0][1]
        rep.expect("nullity - group_dim", h1_end, nullity - group)
    return rep


# -- restrictions ----------------------------------------------------------------------------

def move_line_to_axis(m: Monad, seed=0, trials=50):
    """(m', M, line) with z = M w and the trivializing line at {w3 = w4 = 0}."""
    line = find_trivializing_line(m, trials, seed)
    if line is None:
        return None
    M = line_coordinate_change(line, m.field)
    return change_coordinates(m, M), M, line


def check_koszul_dims(m: Monad, seed=0) -> CheckReport:
    rep = _report("koszul_dims", m, seed)
    with timed(rep):
        moved = move_line_to_axis(m, seed)
        if moved is None:
            rep.status = NONGENERIC
            rep.notes.append("no trivializing line found")
            return rep
        m2, M, _ = moved
        rep.inputs["coordinate_change"] = M.to_strings()
        n = m.n
        rep.expect("h1(F(-1))", n, monad_cohomology(m, -1)[1])
        rep.expect("h2(F(-3))", n, monad_cohomology(m, -3)[2])
        mH = restrict(m2, coordinate_plane(4, m.field))
        rep.expect("h1(F_H(-1))", n, monad_cohomology(mH, -1)[1])
        rep.expect("h1(F_H(-2))", n, monad_cohomology(mH, -2)[1])
    return rep


def _union_complex(m2: Monad) -> LineBundleComplex:
    """End F (x) [O(-2) --w3 w4--> O], a resolution of End F restricted to D u H."""
    f = m2.field
    w3w4 = Form.variable(P3, 2, f) * Form.variable(P3, 3, f)
    K = LineBundleComplex(P3, f, ((-2,), (0,)), (FormMatrix(P3, f, [[w3w4]], 1),), start=-1)
    return lbc_tensor(end_complex(m2), K)


def check_mayer_vietoris(m: Monad, seed=0, prime=None) -> CheckReport:
    """Assemble h^1(End F on D u H) from the planes D = {w3=0}, H = {w4=0}.

    0 -> End F_D(-1) -> End F_{D u H} -> End F_H -> 0 is exact since
    O_D(-lambda) = O_D(-1).  When End F_D(-1) has h0 = h2 = 0 the long exact
    sequence gives h1(End F_{D u H}) = h1(End F_D(-1)) + h1(End F_H) - rk d0,
    where the connecting map d0 on H^0 has rank h0(End F_H) - h0(End F_{D u H}),
    and h0(End F_{D u H}) = h0(End F) because End F(-2) has no H^0 or H^1.
    The union is also computed directly from End F (x) [O(-2) -> O].
    """
    rep = _report("mayer_vietoris", m, seed)
    rep.prime = prime
    with timed(rep):
        moved = move_line_to_axis(m, seed)
        if moved is None:
            rep.status = NONGENERIC
            rep.notes.append("no trivializing line found")
            return rep
        m2, M, _ = moved
        rep.inputs["coordinate_change"] = M.to_strings()
        f = m.field
        mD = restrict(m2, coordinate_plane(3, f))
        mH = restrict(m2, coordinate_plane(4, f))
        e1 = [f.one if k == 0 else f.zero for k in range(4)]
        e2 = [f.one if k == 1 else f.zero for k in range(4)]
        ml = restrict(m2, line_through(e1, e2, f))
        hD, _ = end_h(mD, -1, prime=prime)
        hH, _ = end_h(mH, 0, prime=prime)
        hl, _ = end_h(ml, 0, prime=prime)
        hF, _ = end_h(m, 0, prime=prime)
        rep.computed.update({"h(End F_D(-1))": list(hD), "h(End F_H)": list(hH),
                             "h(End F_lambda)": list(hl), "h(End F)": list(hF)})
        rep.expect("h(End F_lambda)", [m.r ** 2, 0], list(hl))
        rep.expect("h1(End F_D(-1))", 2 * m.r * m.n, hD[1])
        hm2, _ = end_h(m, -2, prime=prime)
        rep.expect("h0,h1(End F(-2))", [0, 0], list(hm2[:2]))
        if hD[0] or hD[2]:
            rep.status = NONGENERIC
            rep.notes.append("End F_D(-1) has h0 or h2: restriction is not generic")
            return rep
        d0 = hH[0] - hF[0]
        rep.computed["rank d0"] = d0
        assembled = hD[1] + hH[1] - d0
        rep.computed["assembled h1(End F_DuH)"] = assembled
        direct = _hyper(_union_complex(m2), prime=prime)
        rep.bound = direct.bound
        hU = list(direct.vector(0, 3))
        rep.computed["h(End F_DuH)"] = hU
        rep.expect("euler additivity", sum((-1) ** i * x for i, x in enumerate(hD)) +
                   sum((-1) ** i * x for i, x in enumerate(hH)),
                   sum((-1) ** i * x for i, x in enumerate(hU)))
        rep.expect("direct h1(End F_DuH)", assembled, hU[1])
        rep.expect("h1(End F)", hF[1], assembled)
    return rep


def quadric_profile_expected(r, n, ks):
    a = (2 * n) // r
    rho = 2 * n - a * r
    return a, rho, [(r - rho) * max(0, k - a + 1) + rho * max(0, k - a) for k in ks]


def check_quadric_splitting(m: Monad, seed=None, prime=None) -> CheckReport:
    rep = _report("quadric_splitting", m, seed)
    rep.prime = prime
    with timed(rep):
        a, rho, _ = quadric_profile_expected(m.r, m.n, [])
        ks = list(range(0, a + 3))
        _, _, expected = quadric_profile_expected(m.r, m.n, ks)
        mQ = restrict(m, "quadric")
        profile = []
        for k in ks:
            res = _hyper(mQ.complex((k, 0)), prime=prime)
            profile.append(res[0])
        rep.computed.update({"a'": a, "rho'": rho, "h0(F_Q(k,0))": profile})
        rep.expected.update({"a'": a, "rho'": rho, "h0(F_Q(k,0))": expected})
        rep.inputs["twists"] = ks
        if profile != expected:
            rep.status = NONGENERIC
            rep.notes.append("non-generic restriction: profile differs from the balanced pushforward")
    return rep


# -- suite -------------------------------------------------------------------------------------

def parse_grid(text: str):
    out = []
    for cell in text.split(","):
        r, n = cell.split(":")
        out.append((int(r), int(n)))
    return out


def run_suite(grid, seed: int = 0, *, retries: int = 3, mayer_vietoris_max_n: int = 2):
    """All checkers on one sample per (r, n); resample (seed + 1, ...) on non-simple samples."""
    reports = []
    partner = sample_instanton(2, 1, seed)
    for r, n in grid:
        s = seed
        for attempt in range(retries + 1):
            m = sample_instanton(r, n, s)
            end = check_end_dims(m, seed=s)
            if end.status != NONGENERIC or attempt == retries:
                break
            s += 1
        cell = [check_dimension_table(m, s), check_riemann_roch(m, s),
                check_instanton_condition(m, s), end]
        h1_end = end.computed["h(End F)"][1]
        cell.append(check_tangent_dimension(m, h1_end=h1_end, seed=s))
        cell.append(check_tensor_vanishing(m, partner, seed=s))
        cell.append(check_koszul_dims(m, s))
        if n <= mayer_vietoris_max_n:
            cell.append(check_mayer_vietoris(m, s))
        cell.append(check_quadric_splitting(m, s))
        reports += cell
    return reports
