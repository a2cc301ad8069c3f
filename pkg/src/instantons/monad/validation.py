"""Validation of monads: complex condition, fibre ranks, instanton condition."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from ..algebra import DEFAULT_PRIME, PrimeField
from ..algebra.modular import rank_mod_p
from ..cohomology import monad_cohomology
from ..forms import P3
from .core import Monad


@dataclass(frozen=True)
class Item:
    name: str
    ok: bool | None  # None: skipped or informational
    detail: str = ""
    probabilistic: bool = False


@dataclass
class ValidationReport:
    items: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(it.ok is not False for it in self.items)

    def __getitem__(self, name):
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)

    def failures(self):
        return [it for it in self.items if it.ok is False]

    def to_dict(self):
        return {it.name: {"ok": it.ok, "detail": it.detail,
                          **({"certificate": "probabilistic"} if it.probabilistic else {})}
                for it in self.items}


def sample_points(nvars: int, trials: int, p: int, rng: random.Random, coordinate=True):
    pts = []
    if coordinate:
        for i in range(nvars):
            pts.append([1 if k == i else 0 for k in range(nvars)])
        for i, j in combinations(range(nvars), 2):
            pt = [0] * nvars
            pt[i], pt[j] = rng.randrange(1, p), rng.randrange(1, p)
            pts.append(pt)
    while len(pts) < trials + (nvars + nvars * (nvars - 1) // 2 if coordinate else 0):
        pt = [rng.randrange(p) for _ in range(nvars)]
        if any(pt):
            pts.append(pt)
    return pts


def fibre_rank_failures(m: Monad, trials: int = 64, seed: int = 0, prime: int | None = None):
    """Points (over F_p) where epsilon or q drops rank."""
    fld = m.field
    p = fld.p if isinstance(fld, PrimeField) else (prime or DEFAULT_PRIME)
    rng = random.Random(f"fibres:{seed}")
    bad = []
    coordinate = not m.space.is_product
    for pt in sample_points(m.space.nvars, trials, p, rng, coordinate):
        if m.space.is_product and (not any(pt[:2]) or not any(pt[2:])):
            continue
        re = rank_mod_p(m.epsilon.evaluate_mod_p(pt, p), p)
        rq = rank_mod_p(m.q.evaluate_mod_p(pt, p), p)
        if re < m.n or rq < m.n:
            bad.append((tuple(pt), re, rq))
    return bad, p


def validate(m: Monad, trials: int = 64, seed: int = 0, *, prime: int | None = None,
             line_trials: int = 50, check_line: bool = True) -> ValidationReport:
    rep = ValidationReport()
    comp = m.composite()
    rep.items.append(Item("complex", comp.is_zero(),
                          "q.epsilon = 0 exactly" if comp.is_zero() else "q.epsilon != 0"))

    bad, p = fibre_rank_failures(m, trials, seed, prime)
    rep.items.append(Item("fibre_ranks", not bad,
                          f"ranks n={m.n} at {trials} random points + coordinate points over F_{p}"
                          if not bad else f"rank drops at {len(bad)} points, first {bad[0]}",
                          probabilistic=not bad))

    if m.n >= m.r:
        hyp = f"n >= r holds for (r, n) = ({m.r}, {m.n})"
    elif (m.r, m.n) == (2, 1):
        hyp = "(r, n) = (2, 1) is the admitted exception to n >= r"
    else:
        hyp = f"(r, n) = ({m.r}, {m.n}) lies outside n >= r"
    rep.items.append(Item("standing_hypothesis", None, hyp))

    usable = rep["complex"].ok and rep["fibre_ranks"].ok
    if m.space == P3 and usable:
        h = monad_cohomology(m, -2)
        rep.items.append(Item("instanton_condition", h[1] == 0 and h[2] == 0,
                              f"h^1(F(-2)) = {h[1]}, h^2(F(-2)) = {h[2]}"))
    else:
        rep.items.append(Item("instanton_condition", None, "skipped"))

    if m.space == P3 and usable and check_line:
        from .restriction import find_trivializing_line
        line = find_trivializing_line(m, line_trials, seed)
        rep.items.append(Item("trivializing_line", line is not None,
                              "found" if line is not None
                              else f"none among {line_trials} random lines"))
    else:
        rep.items.append(Item("trivializing_line", None, "skipped"))
    return rep
