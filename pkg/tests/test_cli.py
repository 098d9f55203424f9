import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from semiweight.cli import main
from semiweight.report import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "4,14,29", "--gamma", "3", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["w_k"] == 109 and rep["flags"]["attains_max_k"] is True
    assert rep["semigroup"]["generators"] == [4, 14, 29]
    jsonschema.validate(rep, load_schema("analyze"))


def test_analyze_gaps(capsys):
    code, out, _ = run(capsys, "analyze", "--gaps", "1,3,5,7,9", "--json")
    rep = json.loads(out)
    assert rep["symmetric"] and rep["gammas"] == [0] and rep["w_k"] == rep["w_s"] == 10
    jsonschema.validate(rep, load_schema("analyze"))


def test_analyze_not_cofinite(capsys):
    code, _, err = run(capsys, "analyze", "--gens", "4,6")
    assert code != 0 and "NotCofinite" in err


def test_analyze_bad_gaps(capsys):
    code, _, err = run(capsys, "analyze", "--gaps", "2,4")
    assert code != 0 and "NotASemigroup" in err


def test_analyze_csv(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "4,6,11,13", "--csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1
    assert rows[0]["w_k"] == "8" and rows[0]["r_k"] == "22" and rows[0]["gammas"] == "1"


def test_analyze_without_gamma_on_naturals(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "1", "--json")
    rep = json.loads(out)
    assert rep["genus"] == 0 and rep["w_k"] == rep["w_s"] == rep["r"] == 0
    jsonschema.validate(rep, load_schema("analyze"))


def test_verify_json_schema_and_determinism(capsys, tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--gamma-max", "3", "--genus-max", "14", "--json", "--out", str(p1)]) == 0
    assert main(["verify", "--gamma-max", "3", "--genus-max", "14", "--json", "--out", str(p2),
                 "--threads", "2"]) == 0
    a, b = json.loads(p1.read_text()), json.loads(p2.read_text())
    jsonschema.validate(a, load_schema("sweep"))
    a.pop("runtime"), b.pop("runtime")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["violations"] == []
    vac = {(r["gamma"], r["genus"]) for r in a["records"] if r["vacuous"]}
    assert (3, 7) in vac


def test_verify_gamma_one_records(capsys):
    code, out, _ = run(capsys, "verify", "--gamma-max", "1", "--genus-max", "10", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["violations"] == []
    for r in rep["records"]:
        if r["gamma"] == 1 and not r["vacuous"]:
            g = r["genus"]
            assert r["w_k_min"] == r["w_k_max"] == (g - 2) * (g - 3) // 2 + 2


def test_verify_csv_rows_match_population(capsys, tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["verify", "--gamma-max", "3", "--genus-max", "16", "--csv", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert main(["verify", "--gamma-max", "3", "--genus-max", "16", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert len(rows) == rep["population"]
    assert list(rows[0].keys())[:4] == ["gamma", "genus", "frobenius", "multiplicity"]


def test_verify_exit_code_on_violation(monkeypatch, capsys):
    import semiweight.cli as cli
    from semiweight.verify import SweepResult

    fake = SweepResult(0, 1, 1, [], [{"gamma": 0, "genus": 1, "kind": "bound_k", "gaps": [1],
                                       "detail": "x"}], [], 0, 0.0)
    monkeypatch.setattr(cli, "run_sweep", lambda *a, **k: fake)
    assert main(["verify", "--gamma-max", "0", "--genus-max", "1"]) == 1


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--genus-max", "5", "--json")
    rep = json.loads(out)
    assert rep["counts"] == [1, 1, 2, 4, 7, 12]
    jsonschema.validate(rep, load_schema("count"))
    code, out, _ = run(capsys, "count", "--genus-max", "0", "--json")
    assert json.loads(out)["counts"] == [1]


def test_count_threads_identical(capsys):
    _, a, _ = run(capsys, "count", "--genus-max", "8", "--json", "--threads", "1")
    _, b, _ = run(capsys, "count", "--genus-max", "8", "--json", "--threads", "4")
    assert json.loads(a)["counts"] == json.loads(b)["counts"]


def test_render_svg(capsys, tmp_path):
    out = tmp_path / "fig.svg"
    code, _, err = run(capsys, "render", "--gens", "4,14,29", "--mode", "K", "--diff-min",
                       "--format", "svg", "--out", str(out))
    assert code == 0 and out.read_text().count('class="red"') == 12 and "red cells: 12" in err


def test_render_ascii(capsys):
    code, out, _ = run(capsys, "render", "--gens", "2,11", "--format", "ascii")
    assert out.count("#") == 10
    code, out, _ = run(capsys, "render", "--gens", "2,3", "--mode", "K")
    assert "#" not in out


def test_render_diff_needs_gamma(capsys):
    code, _, err = run(capsys, "render", "--gens", "5,6,7,8,9", "--diff-min")
    assert code == 2


def test_enumerate_stream(capsys):
    code, out, _ = run(capsys, "enumerate", "--genus", "3")
    assert sorted(out.splitlines()) == ["1 2 3", "1 2 4", "1 2 5", "1 3 5"]
    code, out, _ = run(capsys, "enumerate", "--genus-max", "6", "--gamma", "1", "--csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["genus"] for r in rows].count("6") == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "semiweight", "analyze", "--gens", "2,3"],
                         capture_output=True, text=True, check=True)
    assert "W_K 0" in res.stdout
