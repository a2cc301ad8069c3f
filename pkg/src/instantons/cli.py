"""Command-line harness: ``python -m instantons <command> ...``.

Exit codes: 0 when every hard assertion passes, 1 on an assertion failure,
2 on usage, I/O or parse errors.  Check commands print JSON lines (one
report per check) or, with ``--format csv``, the CSV summary; ``--summary``
writes the CSV alongside.  Reports carry no timings unless ``--timing``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .algebra import QQ, QQI, PrimeField, field_from_tag
from .reports import FAIL, PASS, CheckReport, exit_status, json_lines, monad_digest, summary_csv, timed


class UsageError(Exception):
    """Bad input file or argument: exit status 2."""


# -- I/O helpers ------------------------------------------------------------------

def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc


def _parse(path, loads):
    try:
        return loads(_read(path))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _convert(m, tag):
    if tag is None or tag == m.field.tag:
        return m
    F = field_from_tag(tag)
    if isinstance(F, PrimeField):
        return m.reduce_mod(F.p)
    if m.field == QQ and F == QQI:
        return m.change_field(QQI)
    raise UsageError(f"cannot convert a monad over {m.field.tag} to {tag}")


def _load_monad(path, args=None):
    from .monad import loads_monad
    m = _parse(path, loads_monad)
    return _convert(m, getattr(args, "field", None))


def _emit(reports, args) -> int:
    timing = getattr(args, "timing", False)
    if args.format == "csv":
        _write(args.output, summary_csv(reports))
    else:
        _write(args.output, json_lines(reports, timing))
    if getattr(args, "summary", None):
        _write(args.summary, summary_csv(reports))
    return exit_status(reports)


def _interval(text):
    try:
        a, b = text.split(":")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b, got {text!r}") from None


def _field_tag(text):
    try:
        field_from_tag(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _natural(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("expected a natural number")
    return v


def _seed(text):
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


# -- monad commands ------------------------------------------------------------------

def cmd_sample(args):
    from .monad import dumps_monad, sample_instanton
    m = sample_instanton(args.r, args.n, args.seed, trials=args.trials)
    _write(args.output, dumps_monad(_convert(m, args.field)))
    return 0


def cmd_validate(args):
    from .monad import validate
    m = _load_monad(args.file, args)
    rep = CheckReport("validate", inputs={"r": m.r, "n": m.n, "seed": args.seed,
                                          "digest": monad_digest(m), "trials": args.trials},
                      field=m.field.tag, prime=getattr(m.field, "p", None))
    with timed(rep):
        v = validate(m, args.trials, args.seed)
    rep.computed = v.to_dict()
    rep.status = PASS if v.ok else FAIL
    return _emit([rep], args)


def cmd_cohomology(args):
    from .cohomology import CohomologyTable, cech_hypercohomology, monad_cohomology
    m = _load_monad(args.file, args)
    top = m.space.dim
    bound = None
    if args.engine == "cech":
        rows = {}
        for k in args.twists:
            res = cech_hypercohomology(m.complex(k), args.bound)
            rows[k] = res.vector(0, top)
            bound = res.bound
        fn = rows.__getitem__
    else:
        fn = lambda k: monad_cohomology(m, k)
    table = CohomologyTable.build(fn, list(args.twists))
    if args.format == "csv":
        lines = ["k," + ",".join(f"h{i}" for i in range(top + 1))]
        lines += [f"{k}," + ",".join(map(str, table.row(k))) for k in args.twists]
        _write(args.output, "\n".join(lines) + "\n")
        return 0
    rep = CheckReport("cohomology", inputs={"r": m.r, "n": m.n, "digest": monad_digest(m),
                                            "engine": args.engine},
                      field=m.field.tag, prime=getattr(m.field, "p", None), bound=bound)
    rep.computed = {str(k): list(table.row(k)) for k in args.twists}
    _write(args.output, json_lines([rep], args.timing))
    return 0


def cmd_tensor_check(args):
    from .checks import check_tensor_vanishing
    m1, m2 = _load_monad(args.file, args), _load_monad(args.other, args)
    return _emit([check_tensor_vanishing(m1, m2, bound=args.bound, seed=args.seed)], args)


def cmd_end_check(args):
    from .checks import check_end_dims
    return _emit([check_end_dims(_load_monad(args.file, args), bound=args.bound, seed=args.seed)],
                 args)


def cmd_tangent_check(args):
    from .checks import check_tangent_dimension
    return _emit([check_tangent_dimension(_load_monad(args.file, args), seed=args.seed)], args)


def _coords(text, F):
    try:
        return [F.parse(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coordinates {text!r}: {exc}") from exc


def cmd_restrict(args):
    from .cohomology import cech_hypercohomology
    from .monad import line_through, plane_from_covector, random_line, restrict
    m = _load_monad(args.file, args)
    F = m.field
    if args.to == "quadric":
        target = "quadric"
    elif args.to == "plane":
        h = _coords(args.covector, F) if args.covector else [F.zero, F.zero, F.zero, F.one]
        target = plane_from_covector(h, F)
    else:
        if args.points:
            p, q = args.points.split(";")
            target = line_through(_coords(p, F), _coords(q, F), F)
        else:
            target = random_line(random.Random(f"restrict:{args.seed}"), F)
    try:
        mr = restrict(m, target)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sp = mr.space
    rep = CheckReport("restrict", inputs={"r": m.r, "n": m.n, "seed": args.seed,
                                          "digest": monad_digest(m), "target": args.to},
                      field=F.tag, prime=getattr(F, "p", None))
    with timed(rep):
        for k in args.twists:
            kk = (k, 0) if sp.is_product else k
            res = cech_hypercohomology(mr.complex(kk), args.bound)
            rep.computed[":".join(map(str, kk)) if sp.is_product else str(k)] = list(
                res.vector(0, sp.dim))
            rep.bound = res.bound
    return _emit([rep], args)


def cmd_splitting(args):
    from .monad import random_line, splitting_type
    m = _load_monad(args.file, args)
    rng = random.Random(f"splitting:{args.seed}")
    rep = CheckReport("splitting", inputs={"r": m.r, "n": m.n, "seed": args.seed,
                                           "digest": monad_digest(m), "trials": args.trials},
                      field=m.field.tag, prime=getattr(m.field, "p", None))
    with timed(rep):
        types = {}
        for _ in range(args.trials):
            try:
                st = splitting_type(m, random_line(rng, m.field))
            except ValueError:
                rep.notes.append("a sampled line met the degeneracy locus")
                continue
            key = ",".join(map(str, st.degrees))
            types[key] = types.get(key, 0) + 1
        rep.computed["splitting_types"] = dict(sorted(types.items()))
        trivial = ",".join(["0"] * m.r)
        rep.computed["trivial_lines"] = types.get(trivial, 0)
        if not types.get(trivial):
            rep.status = FAIL
            rep.notes.append("no trivial restriction among the sampled lines")
    return _emit([rep], args)


def cmd_koszul(args):
    from .checks import check_koszul_dims
    return _emit([check_koszul_dims(_load_monad(args.file, args), args.seed)], args)


def cmd_mayer_vietoris(args):
    from .checks import check_mayer_vietoris
    return _emit([check_mayer_vietoris(_load_monad(args.file, args), args.seed)], args)


def cmd_quadric_split(args):
    from .checks import check_quadric_splitting
    return _emit([check_quadric_splitting(_load_monad(args.file, args), args.seed)], args)


def cmd_suite(args):
    from .checks import parse_grid, run_suite
    try:
        grid = parse_grid(args.grid)
    except ValueError as exc:
        raise UsageError(f"bad grid {args.grid!r}: expected r:n,r:n,...") from exc
    return _emit(run_suite(grid, args.seed, retries=args.retries), args)


# -- roundtrip ------------------------------------------------------------------------------

def roundtrip(path) -> bool:
    """Parse a monad, ADHM or extension file and re-serialize it byte for byte."""
    return _roundtrip(path)[1]


def _roundtrip(path):
    from .adhm import dumps_adhm, loads_adhm
    from .hirzebruch import dumps_extension, loads_extension
    from .monad import dumps_monad, loads_monad, roundtrip_text
    text = _read(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if isinstance(obj, dict) and "epsilon" in obj:
        codec, kind = (loads_monad, dumps_monad), "monad"
    elif isinstance(obj, dict) and "left" in obj and "points" in obj:
        codec, kind = (loads_extension, dumps_extension), "extension"
    elif isinstance(obj, dict) and "left" in obj:
        codec, kind = (loads_adhm, dumps_adhm), "adhm"
    else:
        raise UsageError(f"{path}: not a monad, ADHM or extension file")
    try:
        return kind, roundtrip_text(text, *codec)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_roundtrip(args):
    kind, ok = _roundtrip(args.file)
    sys.stdout.write(json.dumps({"file": args.file, "kind": kind, "roundtrip": ok}) + "\n")
    return 0 if ok else 1


# -- hirzebruch ------------------------------------------------------------------------------

def _extension(args):
    from .hirzebruch import HirzebruchError, loads_extension, random_extension_data
    if args.file:
        return _parse(args.file, loads_extension)
    if args.r is None or args.m is None:
        raise UsageError("give an extension file or -r and -m for random data")
    try:
        return random_extension_data(args.r, args.m, random.Random(f"extension:{args.seed}"))
    except HirzebruchError as exc:
        raise UsageError(str(exc)) from exc


def _ext_report(name, e, args):
    return CheckReport(name, inputs={"r": e.r, "m": e.m, "seed": args.seed,
                                     "points": [str(x) for x in e.points]})


def _twist_grid(e):
    a, _ = e.splitting
    return [(k1, k2) for k1 in range(-2, a + 2) for k2 in range(-2, 2)]


def cmd_hirzebruch(args):
    from .hirzebruch import (
        HirzebruchError, QuotientRingElement, aut_action, aut_from_dict, aut_to_dict,
        build_quadric_bundle, cohomology_table, dumps_extension, normalize_u1_slice,
        random_aut, random_t, riemann_roch_check, splitting_profile, t_action,
    )
    e = _extension(args)
    try:
        if args.op == "build":
            pres = build_quadric_bundle(e)
            rep = riemann_roch_check(pres)
            rep.inputs.update({"seed": args.seed, "points": [str(x) for x in e.points]})
            a, _ = e.splitting
            ks = list(range(a - 1, a + 3))
            got, want = splitting_profile(pres, ks)
            rep.expect("h0(V(k,0)) for k=" + ",".join(map(str, ks)), want, got)
            reports = [rep]
        elif args.op == "normalize":
            w, e2 = normalize_u1_slice(e)
            rep = _ext_report("hirzebruch_normalize", e, args)
            rep.computed["w"] = aut_to_dict(w)
            rep.expect("[III] after normalization is zero", True,
                       all(x == 0 for row in e2.block("III") for x in row))
            rep.expect("idempotent", True, normalize_u1_slice(e2)[1] == e2)
            reports = [rep]
        else:
            rng = random.Random(f"act:{args.seed}")
            a, rho = e.splitting
            if args.aut:
                w = _parse(args.aut, lambda t: aut_from_dict(json.loads(t), e.r, rho))
            else:
                w = random_aut(e.r, e.m, rng)
            if args.t:
                coeffs = [Fraction(x) for x in args.t.split(",")]
                t = QuotientRingElement(e.ring, tuple(coeffs))
            else:
                t = random_t(e.ring, rng, e.points)
            e2 = t_action(t, aut_action(w, e))
            rep = _ext_report("hirzebruch_act", e, args)
            rep.inputs["aut"] = aut_to_dict(w)
            rep.inputs["t"] = [str(c) for c in t.coeffs]
            tw = _twist_grid(e)
            before = cohomology_table(build_quadric_bundle(e), tw)
            after = cohomology_table(build_quadric_bundle(e2), tw)
            rep.expect("cohomology table invariant", {str(k): list(v) for k, v in before.items()},
                       {str(k): list(v) for k, v in after.items()})
            reports = [rep]
    except HirzebruchError as exc:
        raise UsageError(str(exc)) from exc
    except ValueError as exc:
        raise UsageError(f"{exc}") from exc
    if args.save:
        _write(args.save, dumps_extension(e2 if args.op != "build" else e))
    return _emit(reports, args)


# -- adhm ---------------------------------------------------------------------------------------

def cmd_adhm(args):
    from .adhm import (
        adhm_to_monad, check_atiyah_pair, check_constraints, check_real_line_trivial, dumps_adhm,
        impose_quaternionic, loads_adhm, quaternionic_charge_one, recover_left, rho_pullback,
        thooft_data,
    )
    from .algebra import Matrix
    from .monad import dumps_monad, monad_isomorphic

    if args.op == "impose":
        if args.file:
            def loads(text):
                obj = json.loads(text)
                left = [Matrix.from_strings(M, QQI) for M in obj["left"]]
                return impose_quaternionic(left, obj.get("r"))
            d = _parse(args.file, loads)
        elif args.n == 1 and not args.thooft:
            d = quaternionic_charge_one(args.seed)[0]
        else:
            d = thooft_data(args.n or 1, random.Random(f"thooft:{args.seed}"))
        if not (check_constraints(d) and recover_left(d.right) == d.left):
            return 1
        _write(args.output, dumps_adhm(d))
        return 0

    if args.op == "convert":
        d = _parse(args.file, loads_adhm)
        m, v = adhm_to_monad(d, trials=args.trials, seed=args.seed)
        if m is None:
            sys.stderr.write(json.dumps(v.to_dict()) + "\n")
            return 1
        _write(args.output, dumps_monad(m))
        return 0

    # real-check
    m = _load_monad(args.file)
    if m.field == QQ:
        m = m.change_field(QQI)
    if m.field != QQI:
        raise UsageError("the real structure needs a monad over Q or Qi")
    rep = CheckReport("real_check", inputs={"r": m.r, "n": m.n, "seed": args.seed,
                                            "digest": monad_digest(m), "trials": args.trials},
                      field=m.field.tag)
    with timed(rep):
        rep.expect("rho-invariant (intertwiner found)", True,
                   monad_isomorphic(m, rho_pullback(m), seed=args.seed) is not None)
    reports = [rep, check_real_line_trivial(m, args.trials, args.seed), check_atiyah_pair(m)]
    return _emit(reports, args)


# -- parser -------------------------------------------------------------------------------------

def _common(p, *, seed=True, trials=None, bound=False, field=True, fmt="json"):
    if seed:
        p.add_argument("--seed", type=_seed, default=0)
    if trials is not None:
        p.add_argument("--trials", type=_natural, default=trials)
    if bound:
        p.add_argument("--bound", type=_natural, default=None)
    if field:
        p.add_argument("--field", type=_field_tag, default=None, help="Q, Qi or Fp:<p>")
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.add_argument("--format", choices=("json", "csv"), default=fmt)
    p.add_argument("--summary", default=None, help="also write the CSV summary here")
    p.add_argument("--timing", action="store_true", help="include timings in the reports")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="instantons", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="sample an instanton monad")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    _common(p, trials=64)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("validate", help="validate a monad file")
    p.add_argument("file")
    _common(p, trials=64)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("cohomology", help="cohomology table of F(k)")
    p.add_argument("file")
    p.add_argument("--twists", type=_interval, default=_interval("-4:2"))
    p.add_argument("--engine", choices=("display", "cech"), default="display")
    _common(p, seed=False, bound=True, fmt="csv")
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("tensor-check", help="vanishing for F (x) G")
    p.add_argument("file")
    p.add_argument("other")
    _common(p)
    p.set_defaults(fn=cmd_tensor_check)
    p.add_argument("--bound", type=_natural, default=10)

    for name, fn, helptext in (("end-check", cmd_end_check, "End F dimensions"),
                               ("tangent-check", cmd_tangent_check, "tangent space dimension"),
                               ("koszul-check", cmd_koszul, "plane and line restriction dims"),
                               ("mayer-vietoris", cmd_mayer_vietoris, "End F on two planes"),
                               ("quadric-split", cmd_quadric_split, "splitting on the quadric")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        _common(p, bound=name == "end-check")
        p.set_defaults(fn=fn)

    p = sub.add_parser("restrict", help="cohomology of a restriction")
    p.add_argument("file")
    p.add_argument("--to", choices=("plane", "line", "quadric"), default="plane")
    p.add_argument("--covector", help="plane h.z = 0 as 'h1,h2,h3,h4'")
    p.add_argument("--points", help="line through 'a,b,c,d;e,f,g,h'")
    p.add_argument("--twists", type=_interval, default=_interval("-2:1"))
    _common(p, bound=True)
    p.set_defaults(fn=cmd_restrict)

    p = sub.add_parser("splitting", help="splitting types on random lines")
    p.add_argument("file")
    _common(p, trials=10)
    p.set_defaults(fn=cmd_splitting)

    p = sub.add_parser("hirzebruch", help="extension data on the quadric")
    p.add_argument("op", choices=("build", "normalize", "act"))
    p.add_argument("file", nargs="?")
    p.add_argument("-r", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("--aut", help="automorphism file (A, B, H0, H1)")
    p.add_argument("--t", help="coefficients c0,...,c(m-1) of t")
    p.add_argument("--save", help="write the resulting extension data here")
    _common(p, field=False)
    p.set_defaults(fn=cmd_hirzebruch)

    p = sub.add_parser("adhm", help="quaternionic ADHM data")
    p.add_argument("op", choices=("impose", "convert", "real-check"))
    p.add_argument("file", nargs="?")
    p.add_argument("-n", type=int)
    p.add_argument("--thooft", action="store_true", help="'t Hooft data instead of the solver")
    _common(p, trials=20, field=False)
    p.set_defaults(fn=cmd_adhm)

    p = sub.add_parser("suite", help="all checks over a grid of (r, n)")
    p.add_argument("--grid", default="2:1,2:2,3:3")
    p.add_argument("--retries", type=_natural, default=3)
    _common(p, field=False)
    p.set_defaults(fn=cmd_suite)

    p = sub.add_parser("roundtrip", help="parse and re-serialize a file byte for byte")
    p.add_argument("file")
    p.set_defaults(fn=cmd_roundtrip)
    return ap


def _glue_negative_values(argv):
    """Allow ``--twists -4:2``: argparse would read -4:2 as an option."""
    out, it = [], iter(argv)
    for a in it:
        if a in ("--twists", "--grid"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


@dataclass
class RunConfig:
    """A parsed command line; every report it produces records seed and bound."""

    command: str
    namespace: argparse.Namespace

    @property
    def seed(self):
        return getattr(self.namespace, "seed", None)

    @property
    def bound(self):
        return getattr(self.namespace, "bound", None)

    @classmethod
    def from_argv(cls, argv) -> "RunConfig":
        ns = build_parser().parse_args(_glue_negative_values(list(argv)))
        return cls(ns.command, ns)


def run(config: RunConfig) -> int:
    args = config.namespace
    if config.command == "adhm" and args.op in ("convert", "real-check") and not args.file:
        sys.stderr.write(f"instantons: adhm {args.op} needs a file\n")
        return 2
    try:
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"instantons: {exc}\n")
        return 2


def main(argv=None) -> int:
    return run(RunConfig.from_argv(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
