"""Cohomology of a linear monad A -> B -> C by chasing its display.

With K = ker(B -> C) the display gives 0 -> K -> B -> C -> 0 and
0 -> A -> K -> F -> 0.  On P^3 and P^2 the intermediate line-bundle
cohomology vanishes, so every h^i(F(k)) is a dimension count corrected by
the rank of one multiplication map (H^0 level, for q) or one Serre-dual
map (top level, for epsilon).
"""

from __future__ import annotations

from ..algebra import rank, rank_mod_p
from ..forms import P2, P3, mult_map, serre_dual_map
from .bott import bott_dim


def _rank(M, prime):
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return rank(M) if prime is None else rank_mod_p(M, prime)


def monad_cohomology(m, k: int, *, prime: int | None = None) -> tuple[int, ...]:
    """(h^0, ..., h^top) of F(k) for a monad on P3 or P2."""
    sp = m.space
    if sp not in (P3, P2):
        raise ValueError("the display chase is implemented on P3 and P2; use the Cech engine")
    n, c = m.n, m.r + 2 * m.n
    top = sp.dim

    h0A = n * bott_dim(sp, 0, k - 1)
    h0B = c * bott_dim(sp, 0, k)
    h0C = n * bott_dim(sp, 0, k + 1)
    htA = n * bott_dim(sp, top, k - 1)
    htB = c * bott_dim(sp, top, k)
    htC = n * bott_dim(sp, top, k + 1)

    rq = _rank(mult_map(m.q, k), prime) if h0B and h0C else 0
    re = _rank(serre_dual_map(m.epsilon, k - 1), prime) if htA and htB else 0

    h0K = h0B - rq
    if sp == P3:
        return (h0K - h0A, h0C - rq, htA - re, htB - htC - re)
    return (h0K - h0A, (h0C - rq) + (htA - re), htB - htC - re)
