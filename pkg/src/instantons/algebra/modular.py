"""Ranks modulo a word-size prime with numpy int64 arithmetic."""

from __future__ import annotations

import numpy as np


def rank_mod_p(rows, p: int) -> int:
    """Rank of an integer matrix reduced mod p.

    Products of two residues must fit in int64, so p < 2**31.
    """
    if p >= 2**31:
        return _rank_mod_p_python(rows, p)
    a = np.array(rows, dtype=np.int64) if len(rows) else np.zeros((0, 0), dtype=np.int64)
    if a.size == 0:
        return 0
    a %= p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        below = np.nonzero(a[r + 1:, c])[0] + r + 1
        if below.size:
            f = a[below, c][:, None]
            a[below] = (a[below] - f * a[r][None, :]) % p
        r += 1
        if r == nrows:
            break
    return r


def _rank_mod_p_python(rows, p):
    m = [[x % p for x in row] for row in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            if a:
                m[i] = [(x - a * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


def kernel_mod_p(rows, p: int):
    """Null-space basis (list of vectors) of an integer matrix mod p."""
    m = [[x % p for x in row] for row in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                a = m[i][c]
                m[i] = [(x - a * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(m[:r], pivots):
            v[pc] = -row[fc] % p
        basis.append(v)
    return basis
