import json

import pytest

from instantons.cli import RunConfig, main, roundtrip, run as run_config
from instantons.cohomology import monad_cohomology
from instantons.monad import load_monad


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(scope="module")
def monad_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "m.json"
    assert main(["sample", "-r", "2", "-n", "2", "--seed", "7", "-o", str(path)]) == 0
    return path


def test_sample_then_validate(capsys, monad_file):
    code, out, _ = run(capsys, "validate", monad_file)
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "pass" and rep["version"] and rep["field"] == "Q"


def test_cohomology_csv(capsys, monad_file):
    code, out, _ = run(capsys, "cohomology", monad_file, "--twists", "-4:2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8 and lines[0] == "k,h0,h1,h2,h3"
    m = load_monad(monad_file)
    for line in lines[1:]:
        k, *h = map(int, line.split(","))
        assert tuple(h) == monad_cohomology(m, k)


def test_cohomology_engines_agree(capsys, monad_file):
    _, a, _ = run(capsys, "cohomology", monad_file, "--twists", "-3:1")
    _, b, _ = run(capsys, "cohomology", monad_file, "--twists", "-3:1", "--engine", "cech")
    assert a == b


def test_reports_are_byte_identical(capsys, monad_file):
    first = run(capsys, "end-check", monad_file, "--seed", "3")
    second = run(capsys, "end-check", monad_file, "--seed", "3")
    assert first == second and first[0] == 0
    rep = json.loads(first[1])
    assert rep["bound"] is not None and "seconds" not in rep
    _, timed, _ = run(capsys, "end-check", monad_file, "--timing")
    assert "seconds" in json.loads(timed)


def test_roundtrip(capsys, monad_file, tmp_path):
    assert roundtrip(monad_file)
    assert run(capsys, "roundtrip", monad_file)[0] == 0
    edited = tmp_path / "edited.json"
    edited.write_text(monad_file.read_text().replace(",", ", ", 1))
    code, out, _ = run(capsys, "roundtrip", edited)
    assert code == 1 and json.loads(out)["roundtrip"] is False


def test_io_and_usage_errors(capsys, tmp_path):
    assert run(capsys, "validate", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": "Q",\n  "r": }')
    code, _, err = run(capsys, "validate", bad)
    assert code == 2 and "line 2" in err
    with pytest.raises(SystemExit) as exc:
        main(["sample", "-r", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["validate", "x.json", "--field", "R"])


def test_check_commands(capsys, monad_file, tmp_path):
    for cmd in ("tangent-check", "koszul-check", "quadric-split"):
        code, out, _ = run(capsys, cmd, monad_file)
        assert code == 0, cmd
        assert json.loads(out)["status"] == "pass"
    m1 = tmp_path / "m1.json"
    main(["sample", "-r", "2", "-n", "1", "-o", str(m1)])
    code, out, _ = run(capsys, "tensor-check", m1, m1, "--format", "csv")
    assert code == 0 and out.splitlines()[1].startswith("tensor_vanishing,pass")
    assert run(capsys, "mayer-vietoris", m1)[0] == 0


def test_field_selection(capsys, monad_file):
    code, out, _ = run(capsys, "validate", monad_file, "--field", "Fp:101")
    rep = json.loads(out)
    assert rep["field"] == "Fp:101" and rep["prime"] == 101


def test_restrict_and_splitting(capsys, monad_file):
    code, out, _ = run(capsys, "restrict", monad_file, "--to", "line", "--twists", "-1:0")
    assert code == 0 and json.loads(out)["computed"] == {"-1": [0, 0], "0": [2, 0]}
    code, out, _ = run(capsys, "splitting", monad_file, "--trials", "3")
    assert code == 0 and json.loads(out)["computed"]["trivial_lines"] == 3


def test_hirzebruch_ops(capsys, tmp_path):
    e = tmp_path / "e.json"
    code, out, _ = run(capsys, "hirzebruch", "build", "-r", "2", "-m", "4", "--save", e)
    assert code == 0 and json.loads(out)["computed"]["h(V)"] == [0, 2, 0]
    assert run(capsys, "roundtrip", e)[0] == 0
    n = tmp_path / "n.json"
    assert run(capsys, "hirzebruch", "normalize", "-r", "3", "-m", "5", "--save", n)[0] == 0
    assert run(capsys, "hirzebruch", "act", n, "--seed", "4")[0] == 0
    assert run(capsys, "hirzebruch", "act", e, "--t", "0,0,0,0")[0] == 2


def test_adhm_ops(capsys, tmp_path):
    a, m = tmp_path / "a.json", tmp_path / "am.json"
    assert run(capsys, "adhm", "impose", "-n", "1", "-o", a)[0] == 0
    assert run(capsys, "roundtrip", a)[0] == 0
    assert run(capsys, "adhm", "convert", a, "-o", m)[0] == 0
    code, out, _ = run(capsys, "adhm", "real-check", m)
    reps = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [r["check"] for r in reps] == ["real_check", "real_line_trivial",
                                                          "atiyah_pair"]
    assert all(r["status"] == "pass" for r in reps)


def test_real_check_fails_on_non_real(capsys, monad_file):
    code, out, _ = run(capsys, "adhm", "real-check", monad_file, "--trials", "3")
    statuses = {json.loads(x)["check"]: json.loads(x)["status"] for x in out.splitlines()}
    assert code == 1 and statuses["real_check"] == "fail" and statuses["atiyah_pair"] == "fail"


def test_suite(capsys, tmp_path):
    summary = tmp_path / "s.csv"
    code, out, _ = run(capsys, "suite", "--grid", "2:1,2:2", "--seed", "1", "--summary", summary)
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert {x["check"] for x in lines} >= {"end_dims", "tensor_vanishing", "mayer_vietoris"}
    assert len(summary.read_text().splitlines()) == len(lines) + 1


def test_run_config_records_seed_and_bound(capsys, monad_file):
    cfg = RunConfig.from_argv(["end-check", str(monad_file), "--seed", "5", "--bound", "12"])
    assert (cfg.command, cfg.seed, cfg.bound) == ("end-check", 5, 12)
    assert run_config(cfg) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["inputs"]["seed"] == 5 and rep["bound"] == 12
