import json
import subprocess
import sys

import pytest

from pipedlab.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from pipedlab.signature import ComponentSignature, compute_signature


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", 103, 101, 106, 266, 271, 255, "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["perfect"] is True
    sig = ComponentSignature.from_string(data["sig"])
    assert sig == compute_signature((103, 101, 106, 266, 271, 255))


def test_analyze_table_and_csv(capsys):
    code, out, _ = run(capsys, "analyze", 17, 32, 41, 61, 72, 43)
    assert code == EXIT_OK and "acute" in out and str(18144 ** 2) in out
    code, out, _ = run(capsys, "analyze", 17, 32, 41, 61, 72, 43, "--csv")
    assert out.splitlines()[0].startswith("edges,class,sig")


def test_domain_errors_exit_1(capsys):
    code, _, err = run(capsys, "analyze", 1, 1, 1, 5, 1, 1)
    assert code == EXIT_DOMAIN and "(a,e,d)" in err
    code, _, _ = run(capsys, "analyze", 7, 8, 9, 21, 22, 29)
    assert code == EXIT_DOMAIN
    code, _, _ = run(capsys, "param-heron", 2, 2, 3, 3)
    assert code == EXIT_DOMAIN


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "classify", 1, 2)[0] == EXIT_USAGE
    assert run(capsys, "param-wyss", 1, 2)[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["analyze", "1", "2"])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == EXIT_USAGE


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", 19, 59, 58, 22, 23, 69, "--json")
    assert code == EXIT_OK and json.loads(out)["class"] == "obtuse"
    code, out, _ = run(capsys, "classify", "--vertex-table", "--json")
    rows = json.loads(out)
    assert len(rows) == 27 and all(r["class"] == r["closed_form"] for r in rows)


def test_family(capsys):
    code, out, _ = run(capsys, "family", 44, 125, 117, 244, 240, 267, "--json")
    assert len(json.loads(out)["members"]) == 6
    code, out, _ = run(capsys, "family", 17, 32, 41, 61, 72, 43)
    assert out.splitlines()[-1].startswith("# 24 members, 0 rows dropped")


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", 44, 125, 117, 244, 240, 267, "--json")
    verts = json.loads(out)["vertices"]
    assert len(verts) == 8


def test_param_commands(capsys):
    code, out, _ = run(capsys, "param-heron", 1, 2, 1, 3)
    assert out.splitlines()[1] == "1,2,1,3,20,15,25,150"
    code, out, _ = run(capsys, "param-wyss", 1, 1, 2, 1, 3, "--json")
    data = json.loads(out)
    assert (data["a"], data["b"], data["d1"], data["d2"], data["case"]) == (5, 5, 8, 6, "case6")
    code, out, _ = run(capsys, "param-wyss", "--bound", 3, "--limit", 2)
    assert code == EXIT_OK and len(out.splitlines()) == 3


def test_parallelogram_commands(capsys):
    code, out, _ = run(capsys, "parallelograms", "--case", 6, "--limit", 3)
    assert out.splitlines()[1] == "3,4,5,5,12,case6"
    code, out, _ = run(capsys, "parallelograms", "--check", 5, 5, 7, "--json")
    assert json.loads(out)["case"] == "case2"
    code, out, _ = run(capsys, "parallelograms", "--in-common")
    assert len(out.splitlines()) == 6
    assert run(capsys, "parallelograms", "--check", 1, 2, 3)[0] == EXIT_DOMAIN


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "--max-a", 10, "--json")
    data = json.loads(out)
    assert code == EXIT_OK and "reference" not in data
    assert data["counts"]["total"] == sum(data["counts"][k] for k in ("case2", "case3", "case5", "case6"))
    code, out, _ = run(capsys, "stats", "--max-a", 0)
    assert code == EXIT_OK


def test_search_files(capsys, tmp_path):
    out_file, hist = tmp_path / "out.jsonl", tmp_path / "hist.csv"
    code, out, _ = run(capsys, "search", "--max-basis", 20, "--out", out_file, "--histogram", hist,
                       "--workers", 1)
    assert code == EXIT_OK
    records = [json.loads(line) for line in out_file.read_text().splitlines()]
    assert out.splitlines()[0] == f"records {len(records)}"
    assert hist.read_text().startswith("skew,")


def test_search_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"max_basis": 25, "class_name": "obtuse", "workers": 1}))
    code, out, _ = run(capsys, "search", "--config", cfg, "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["records"] == data["classes"]["obtuse"]
    cfg.write_text(json.dumps({"max_basis": 25, "speed": 9}))
    assert run(capsys, "search", "--config", cfg)[0] == EXIT_DOMAIN
    assert run(capsys, "search")[0] == EXIT_DOMAIN


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--json")
    assert code == EXIT_OK and json.loads(out)["ok"]
    bad = tmp_path / "bad.csv"
    bad.write_text("source,a,b,c,d,e,f,class,skew,face_diag,body_diag,face_area,body_area,"
                   "volume_flag,volume,perfect,valid,note\n"
                   "x,17,32,41,61,72,43,obtuse,,,,,,,,,1,\n")
    assert run(capsys, "verify", "--fixtures", bad)[0] == EXIT_VERIFY
    bad.write_text("nonsense\n")
    assert run(capsys, "verify", "--fixtures", bad)[0] == EXIT_VERIFY


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pipedlab", "classify", "44", "125", "117", "244", "240", "267"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("rectangular")
