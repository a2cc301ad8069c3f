"""Canonical JSON for monads.

The canonical text is ``json.dumps(obj, separators=(",", ":"))`` on an
object with a fixed key order, followed by a newline.  Files are compared
byte-for-byte, so any hand edit (even whitespace) breaks the roundtrip.
"""

from __future__ import annotations

import json

from ..algebra import field_from_tag
from ..forms import P3, FormMatrix
from .core import Monad


def canonical_dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True) + "\n"


def _linear_rows(M: FormMatrix):
    f = M.field
    rows = []
    for row in M.entries:
        out = []
        for form in row:
            out.append([f.format(form.coeffs.get(tuple(1 if t == k else 0 for t in range(4)), f.zero))
                        for k in range(4)])
        rows.append(out)
    return rows


def monad_to_dict(m: Monad) -> dict:
    if m.space != P3:
        raise ValueError("only monads on P3 have a file format")
    return {"field": m.field.tag, "r": m.r, "n": m.n,
            "epsilon": _linear_rows(m.epsilon), "q": _linear_rows(m.q)}


def monad_from_dict(d: dict) -> Monad:
    try:
        field = field_from_tag(d["field"])
        parse = lambda rows: [[[field.parse(s) for s in c] for c in row] for row in rows]
        eps, q = parse(d["epsilon"]), parse(d["q"])
        r, n = int(d["r"]), int(d["n"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed monad file: {exc!r}") from exc
    if len(eps) != r + 2 * n or any(len(row) != n for row in eps):
        raise ValueError(f"epsilon shape does not match r={r}, n={n}")
    if len(q) != n or any(len(row) != r + 2 * n for row in q):
        raise ValueError(f"q shape does not match r={r}, n={n}")
    if any(len(c) != 4 for row in eps + q for c in row):
        raise ValueError("linear forms need exactly 4 coefficients")
    return Monad.from_coefficients(eps, q, field)


def dumps_monad(m: Monad) -> str:
    return canonical_dumps(monad_to_dict(m))


def loads_monad(text: str) -> Monad:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return monad_from_dict(d)


def save_monad(m: Monad, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_monad(m))


def load_monad(path) -> Monad:
    with open(path, encoding="ascii") as fh:
        return loads_monad(fh.read())


def roundtrip_text(text: str, loads, dumps) -> bool:
    """True iff parsing then re-serializing reproduces ``text`` exactly."""
    return dumps(loads(text)) == text
