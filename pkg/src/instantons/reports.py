"""Structured check reports, emitted as JSON lines plus a CSV summary.

Serialized reports are byte-identical for identical inputs: timings are
measured but left out of the JSON unless explicitly requested.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from . import __version__

PASS, FAIL, NONGENERIC, SKIPPED = "pass", "fail", "nongeneric", "skipped"


@dataclass
class CheckReport:
    name: str
    status: str = PASS
    inputs: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    computed: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    field: str = "Q"
    prime: int | None = None
    bound: int | None = None
    timing: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def expect(self, key, expected, computed):
        """Record one exact comparison; any mismatch turns the report into a failure."""
        self.expected[key] = expected
        self.computed[key] = computed
        if expected != computed and self.status == PASS:
            self.status = FAIL
        return expected == computed

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {"check": self.name, "status": self.status, "version": __version__,
             "field": self.field, "prime": self.prime, "bound": self.bound,
             "inputs": self.inputs, "expected": self.expected, "computed": self.computed}
        if self.notes:
            d["notes"] = self.notes
        if include_timing:
            d["seconds"] = round(self.timing, 3)
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=False, separators=(",", ":"),
                          default=_jsonable)


def _jsonable(x):
    if isinstance(x, tuple):
        return list(x)
    return str(x)


@contextmanager
def timed(report: CheckReport):
    t0 = time.perf_counter()
    try:
        yield report
    finally:
        report.timing = time.perf_counter() - t0


def monad_digest(m) -> str:
    from .monad.serialization import canonical_dumps, monad_to_dict
    return hashlib.sha256(canonical_dumps(monad_to_dict(m)).encode()).hexdigest()[:16]


def json_lines(reports, include_timing: bool = False) -> str:
    return "".join(r.to_json(include_timing) + "\n" for r in reports)


def summary_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "status", "r", "n", "seed", "digest", "field", "prime", "bound"])
    for r in reports:
        inp = r.inputs
        w.writerow([r.name, r.status, inp.get("r", ""), inp.get("n", ""), inp.get("seed", ""),
                    inp.get("digest", ""), r.field, "" if r.prime is None else r.prime,
                    "" if r.bound is None else r.bound])
    return buf.getvalue()


def exit_status(reports) -> int:
    return 1 if any(r.failed for r in reports) else 0
