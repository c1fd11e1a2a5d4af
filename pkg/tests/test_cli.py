import csv
import io
import json

import pytest

import grm.lemma
from grm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def polyfile(tmp_path, text, name="f.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_params_exact(capsys):
    code, out, _ = run(capsys, "params", "-q", "4", "-n", "3", "-d", "5")
    rec = json.loads(out)
    assert code == 0
    assert rec["w1"] == 8 and rec["w2"] == {"kind": "exact", "value": 9}
    assert (rec["a"], rec["b"], rec["m"]) == (1, 2, 64)


def test_params_interval(capsys):
    code, out, _ = run(capsys, "params", "-q", "3", "-n", "4", "-d", "3")
    assert code == 0
    assert json.loads(out)["w2"] == {"kind": "interval", "lo": 20, "hi": 27}


def test_params_invalid_degree(capsys):
    code, out, err = run(capsys, "params", "-q", "3", "-n", "3", "-d", "6")
    assert code == 2 and out == "" and "DegreeOutOfRange" in err


def test_params_unsupported_field(capsys):
    code, _, err = run(capsys, "params", "-q", "6", "-n", "3", "-d", "2")
    assert code == 2 and "UnsupportedCardinality" in err


def test_params_not_covered_regime(capsys):
    code, out, _ = run(capsys, "params", "-q", "3", "-n", "2", "-d", "3")
    rec = json.loads(out)
    assert code == 0 and rec["w2"] is None and rec["regime"] == "not-covered"


def test_params_csv_columns(capsys):
    _, out, _ = run(capsys, "--format", "csv", "params", "-q", "3", "-n", "4", "-d", "3")
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["w2_kind"] == "interval" and row["w2_lo"] == "20" and row["w2_value"] == ""
    _, out, _ = run(capsys, "params", "--format", "csv", "-q", "4", "-n", "3", "-d", "5")
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["w2_kind"] == "exact" and row["w2_value"] == "9" and row["w1"] == "8"


def test_out_flag_writes_file(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "--out", str(path), "params", "-q", "4", "-n", "3", "-d", "5")
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["w1"] == 8


def test_arrangements_blocks(capsys):
    code, out, _ = run(capsys, "arrangements", "-q", "3", "-n", "3", "--blocks", "2,2")
    rec = json.loads(out)
    assert code == 0 and rec["N"] == 24 == rec["N_grid"] and rec["W"] == 3


def test_arrangements_search(capsys):
    code, out, _ = run(capsys, "arrangements", "-q", "4", "-n", "3", "-d", "5", "--search")
    rec = json.loads(out)
    assert code == 0
    assert (rec["n2prime"], rec["w2prime"]) == (55, 9)
    assert rec["type"] == [3, 1, 1] and rec["exchange"] == ["T3"]


def test_arrangements_verify(capsys):
    code, out, _ = run(capsys, "arrangements", "--verify", "-q", "3", "-n", "3")
    rows = json.loads(out)
    assert code == 0 and rows and all(r["passed"] for r in rows)


def test_arrangements_bad_blocks(capsys):
    code, _, err = run(capsys, "arrangements", "-q", "3", "-n", "3", "--blocks", "3")
    assert code == 2 and "InvalidType" in err


def test_groebner_footprint(capsys, tmp_path):
    f = polyfile(tmp_path, "X1^2\nX2^2\n")
    code, out, _ = run(capsys, "groebner", f, "-q", "3", "-n", "2", "--action", "footprint")
    rec = json.loads(out)
    assert code == 0 and rec["delta"] == 1 and rec["points"] == 1 and rec["equal"] is True


def test_groebner_points_and_basis(capsys, tmp_path):
    f = polyfile(tmp_path, "# hyperbola\nX1*X2-1\n")
    code, out, _ = run(capsys, "groebner", f, "-q", "5", "-n", "2", "--action", "points")
    assert code == 0 and json.loads(out)["points"] == 4
    code, out, _ = run(capsys, "groebner", f, "-q", "5", "-n", "2", "--action", "basis")
    basis = json.loads(out)["basis"]
    assert code == 0 and "X1*X2 + 4" in basis


def test_groebner_errors(capsys, tmp_path):
    code, _, _ = run(capsys, "groebner", polyfile(tmp_path, ""), "-q", "3", "-n", "2")
    assert code == 2
    code, _, err = run(capsys, "groebner", polyfile(tmp_path, "X1 +* X2", "g.txt"), "-q", "3", "-n", "2")
    assert code == 2 and "PolySyntaxError" in err
    code, _, _ = run(capsys, "groebner", str(tmp_path / "missing.txt"), "-q", "3", "-n", "2")
    assert code == 2
    code, _, err = run(capsys, "--budget", "10", "groebner", polyfile(tmp_path, "X1"), "-q", "3",
                       "-n", "3", "--action", "points")
    assert code == 3 and "BudgetExceeded" in err


def test_groebner_iteration_cap(capsys, tmp_path, monkeypatch):
    import grm.groebner as G
    real = G.buchberger
    monkeypatch.setattr(G, "buchberger", lambda basis, iteration_cap=0: real(basis, iteration_cap=0))
    import grm.cli as C
    monkeypatch.setattr(C, "buchberger", G.buchberger)
    monkeypatch.setattr(C, "ideal_footprint", lambda polys, budget: G.buchberger(polys))
    f = polyfile(tmp_path, "X1^2 + X2\nX1*X2 + 1\n")
    code, _, err = run(capsys, "groebner", f, "-q", "3", "-n", "2", "--action", "basis")
    assert code == 4 and "IterationCapExceeded" in err


def test_poly(capsys, tmp_path):
    f = polyfile(tmp_path, "X1*X2 - 1\nX1^5\n")
    code, out, _ = run(capsys, "poly", f, "-q", "5", "-n", "2")
    rows = json.loads(out)
    assert code == 0
    assert (rows[0]["zeros"], rows[0]["weight"]) == (4, 21)
    assert rows[1]["reduced"] == "X1" and rows[1]["zeros"] == 5


def test_lemma(capsys):
    code, out, _ = run(capsys, "lemma", "-q", "3", "-n", "3", "-d", "4")
    rec = json.loads(out)
    assert code == 0 and rec["mu_brute"] == rec["mu_closed"] == 1 and rec["equal"]
    assert rec["minimizers"] == [[1, 2, 2], [2, 1, 2]] and rec["shape"] == "b=0"


def test_lemma_reports_disagreement(capsys):
    code, out, _ = run(capsys, "lemma", "-q", "4", "-n", "3", "-d", "4")
    rec = json.loads(out)
    assert code == 0 and (rec["mu_brute"], rec["mu_closed"], rec["equal"]) == (1, 2, False)


def test_verify_sampling(capsys):
    code, out, err = run(capsys, "verify", "--suite", "sampling", "--seed", "42", "-q", "3",
                         "-n", "3", "-d", "4", "--samples", "2000")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    gap = [c for c in rep["checks"] if c["task"] == "sampling.gap"]
    assert gap and gap[0]["computed"] == 0
    assert "checks passed" in err


def test_verify_lemma_small_grid(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma", "--q", "3", "--n", "3,4")
    assert code == 0 and json.loads(out)["checks_total"] == 2 + 4


def test_verify_exit_1_on_real_failure(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma", "--q", "4", "--n", "3")
    rep = json.loads(out)
    assert code == 1 and not rep["passed"] and rep["checks_failed"] == 1


def test_verify_corrupted_mu_table(capsys, monkeypatch):
    real = grm.lemma.closed_form_mu
    monkeypatch.setattr(grm.lemma, "closed_form_mu", lambda inst: real(inst) + 1)
    code, out, _ = run(capsys, "verify", "--suite", "lemma", "--q", "3", "--n", "3")
    assert code == 1 and json.loads(out)["checks_failed"] == 2
    code, out, _ = run(capsys, "verify", "--suite", "bridge", "--q", "3", "--n", "3")
    assert code == 1


def test_verify_all_fails_with_corrupted_mu(capsys, monkeypatch):
    import grm.verify as V
    real = grm.lemma.closed_form_mu
    monkeypatch.setattr(grm.lemma, "closed_form_mu", lambda inst: real(inst) + 1)
    monkeypatch.setattr(V, "suite_footprint", lambda cfg, **kw: [])
    monkeypatch.setitem(V.SUITES, "footprint", lambda cfg: [])
    code, out, _ = run(capsys, "verify", "--suite", "all", "--q", "3", "--n", "3",
                       "--samples", "100")
    assert code == 1


def test_determinism(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.csv"
        code = main(["verify", "--suite", "sampling", "--seed", "7", "-q", "4", "-n", "3",
                     "-d", "5", "--samples", "500", "--format", "csv", "--out", str(path),
                     "--timing"])
        capsys.readouterr()
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["params", "-q", "3"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "--q", "3,x"])
    assert e.value.code == 2
