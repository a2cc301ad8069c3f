"""Closed forms for line-bundle cohomology on projective spaces and P1 x P1."""

from __future__ import annotations

from itertools import product
from math import comb

from ..forms import AmbientSpace


def _pn(N: int, i: int, d: int) -> int:
    if i == 0:
        return comb(d + N, N) if d >= 0 else 0
    if i == N:
        return comb(-d - 1, N) if d <= -N - 1 else 0
    return 0


def bott_dim(space: AmbientSpace, i: int, d) -> int:
    """h^i(O(d)); Kunneth over the factors of a product space."""
    md = space.mdeg(d)
    total = 0
    for degs in product(*[(0, N) for N in space.factors]):
        if sum(degs) != i:
            continue
        term = 1
        for N, k, dk in zip(space.factors, degs, md):
            term *= _pn(N, k, dk)
        total += term
    return total


def bott_vector(space: AmbientSpace, d) -> tuple[int, ...]:
    return tuple(bott_dim(space, i, d) for i in range(space.dim + 1))


def euler_char(space: AmbientSpace, d) -> int:
    out = 1
    for N, k in zip(space.factors, space.mdeg(d)):
        # chi(O_{P^N}(k)) = binomial(k + N, N) as a polynomial in k
        num = 1
        for j in range(1, N + 1):
            num *= k + j
        out *= num // _fact(N)
    return out


def _fact(n):
    r = 1
    for j in range(2, n + 1):
        r *= j
    return r
