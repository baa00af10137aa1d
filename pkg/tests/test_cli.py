import json

import pytest

from hopfring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cycle_ko_text(capsys):
    code, out, _ = run(capsys, "cycle", "--spectrum", "ko", "--max-degree", "40")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "KO_8 ≅ KO_0"
    assert sum(1 for l in lines if "->" in l and l[0].isdigit()) == 8


def test_cycle_ku_json(capsys):
    code, out, _ = run(capsys, "cycle", "--spectrum", "ku", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["steps"]) == 2 and doc["closure"]
    g = doc["steps"][0]["tor_generators"][0]
    assert set(g) == {"s", "t", "total", "source"}


def test_negative_degree_is_usage_error(capsys):
    assert run(capsys, "cycle", "--spectrum", "ko", "--max-degree", "-1")[0] == 2


def test_bad_flags_are_usage_errors(capsys):
    assert run(capsys, "cycle", "--spectrum", "hz")[0] == 2
    assert run(capsys, "tor")[0] == 2
    assert run(capsys, "tor", "--preset", "ko3")[0] == 2
    assert run(capsys, "verify", "extensions", "--bound", "65")[0] == 2


def test_env_override(capsys, monkeypatch):
    monkeypatch.setenv("HOPFRING_MAXDEG", "5")
    code, out, _ = run(capsys, "cycle", "--spectrum", "ku", "--format", "json")
    assert json.loads(out)["maxdeg"] == 5
    monkeypatch.setenv("HOPFRING_MAXDEG", "x")
    assert run(capsys, "cycle")[0] == 2


def test_tor_preset(capsys):
    code, out, _ = run(capsys, "tor", "--preset", "ko:3", "--max-degree", "20", "--format", "json")
    doc = json.loads(out)
    assert sorted(g["total"] for g in doc["generators"]) == [4, 8, 8, 12, 16, 16, 16, 20]


def test_tor_gens(capsys):
    code, out, _ = run(capsys, "tor", "--gens", "1; P(deg=1*i+0, i>=1)", "--max-degree", "8",
                       "--format", "json")
    gens = json.loads(out)["generators"]
    assert code == 0 and len(gens) == 7 and all(g["s"] == 1 for g in gens)


def test_tor_periodic_preset(capsys):
    code, out, _ = run(capsys, "tor", "--preset", "ko:9", "--max-degree", "6")
    assert code == 0 and "KO_9 ≅ KO_1" in out and "note:" in out


def test_tor_parse_error(capsys):
    code, _, err = run(capsys, "tor", "--gens", "Z; P(deg=0*i+0, i>=0)")
    assert code == 2 and "parse error" in err


def test_poincare(capsys):
    code, out, _ = run(capsys, "poincare", "--preset", "ko:0", "--max-degree", "4", "--format", "json")
    assert json.loads(out)["coefficients"] == [1, 1, 2, 3, 5]


def test_deloop(capsys):
    code, out, _ = run(capsys, "deloop", "--spectrum", "ko", "--space", "6", "--max-degree", "12")
    assert code == 0 and "Assumed" in out
    assert run(capsys, "deloop", "--space", "8")[0] == 2


def test_verify_relations(capsys):
    code, out, _ = run(capsys, "verify", "relations")
    assert code == 0
    assert "rel9[i=0..12] OK" in out and "rel5-chain OK" in out


def test_verify_hopf_axioms_deterministic(capsys):
    first = run(capsys, "verify", "hopf-axioms", "--seed", "7")
    second = run(capsys, "verify", "hopf-axioms", "--seed", "7")
    assert first[0] == 0 and first == second


def test_verify_extensions(capsys):
    code, out, _ = run(capsys, "verify", "extensions", "--bound", "32")
    assert code == 0
    for space in ["KO1", "KO4", "KO8", "KU1", "KU2"]:
        assert any(l.startswith(f"{space} OK") for l in out.splitlines())


def test_verify_failure_exit_code(capsys, monkeypatch):
    import hopfring.barss as barss
    monkeypatch.setattr(barss, "frobenius_form", lambda f: frozenset([f]))
    code, out, _ = run(capsys, "verify", "extensions", "--spectrum", "ku", "--bound", "8")
    assert code == 1 and "FAIL" in out


def test_relations_table(capsys):
    code, out, _ = run(capsys, "relations-table", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and all(r["homogeneous"] for r in rows)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["cycle", "--spectrum", "ku", "--format", "json", "--out", str(target)]) == 0
    assert json.loads(target.read_text(encoding="utf-8"))["closure"]


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "cycle", "--spectrum", "ko", "--max-degree", "20")
    _, js, _ = run(capsys, "cycle", "--spectrum", "ko", "--max-degree", "20", "--format", "json")
    doc = json.loads(js)
    text_match = [l.split()[-1] == "yes" for l in text.splitlines() if l[:1].isdigit()]
    assert text_match == [s["dimension_match"] for s in doc["steps"]]
