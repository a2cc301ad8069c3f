"""CohomologyTable: (degree i, twist k) -> dimension, with CSV/JSON output."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable


@dataclass(frozen=True)
class CohomologyTable:
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        for key, v in self.entries.items():
            if v < 0:
                raise ValueError(f"negative dimension at {key}")

    @classmethod
    def build(cls, fn: Callable[[object], Iterable[int]], twists) -> "CohomologyTable":
        out = {}
        for k in twists:
            for i, h in enumerate(fn(k)):
                out[(i, k)] = h
        return cls(out)

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def twists(self):
        return sorted({k for _, k in self.entries}, key=_sort_key)

    def row(self, k):
        degs = sorted(i for i, kk in self.entries if kk == k)
        return tuple(self.entries[(i, k)] for i in degs)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "k", "dim"])
        for (i, k), v in sorted(self.entries.items(), key=lambda kv: (_sort_key(kv[0][1]), kv[0][0])):
            w.writerow([i, _fmt_twist(k), v])
        return buf.getvalue()

    def to_json(self) -> str:
        rows = [{"i": i, "k": list(k) if isinstance(k, tuple) else k, "dim": v}
                for (i, k), v in sorted(self.entries.items(),
                                        key=lambda kv: (_sort_key(kv[0][1]), kv[0][0]))]
        return json.dumps(rows, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "CohomologyTable":
        out = {}
        for row in json.loads(text):
            k = tuple(row["k"]) if isinstance(row["k"], list) else row["k"]
            out[(row["i"], k)] = row["dim"]
        return cls(out)


def _sort_key(k):
    return k if isinstance(k, tuple) else (k,)


def _fmt_twist(k):
    return ":".join(map(str, k)) if isinstance(k, tuple) else k
