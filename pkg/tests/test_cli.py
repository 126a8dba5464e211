import json

import pytest

from subcomplexity.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_profile_csv(capsys):
    code, out, err = run(capsys, "profile", "--builtin", "U", "-n", "5", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,p,s,exact"
    assert [int(l.split(",")[1]) for l in lines[1:]] == [1, 2, 3, 4, 5, 6]
    assert lines[1] == "0,1,1,true"


def test_profile_other_formats(capsys):
    code, out, _ = run(capsys, "profile", "--builtin", "AKB", "-n", "5")
    assert code == 0 and [int(l.split(",")[1]) for l in out.splitlines()[1:]] == [1, 2, 2, 2, 2, 2]
    code, out, _ = run(capsys, "profile", "--builtin", "THUEMORSE", "-n", "3", "--format", "json")
    assert [r["p"] for r in json.loads(out)["rows"]] == [1, 2, 4, 6]
    code, out, _ = run(capsys, "profile", "--builtin", "U", "-n", "2", "--format", "table")
    assert code == 0 and out.splitlines()[0].split() == ["n", "p", "s", "exact"]


def test_profile_input_file(capsys, tmp_path):
    f = tmp_path / "src.json"
    f.write_text(json.dumps({"alphabet": ["a", "b"], "source": {"type": "finite", "words": ["ab", "ba"]}}))
    code, out, err = run(capsys, "profile", "--input", str(f), "-n", "2")
    assert code == 0, err
    assert out.splitlines()[1:] == ["0,1,1,true", "1,2,0,true", "2,2,0,true"]


def test_profile_out_file(capsys, tmp_path):
    target = tmp_path / "p.csv"
    code, out, _ = run(capsys, "profile", "--builtin", "U", "-n", "2", "--out", str(target))
    assert code == 0 and out == "" and target.read_text().startswith("n,p,s,exact\n")


@pytest.mark.parametrize("argv", [
    ["profile", "--builtin", "NOPE"],
    ["profile"],
    ["profile", "--builtin", "U", "-n", "-1"],
    ["profile", "--builtin", "U", "-n", "5", "--horizon", "3"],
    ["profile", "--input", "/nonexistent/x.json"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error: ")


def test_malformed_json_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"alphabet": ["a", "b"], "source": {"type": "regular"}}')
    code, out, err = run(capsys, "classify", "--input", str(f))
    assert code == 2 and out == "" and err.startswith("error: ")


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--builtin", "AKB")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "bounded" and doc["bound"] == 2
    code, out, _ = run(capsys, "classify", "--builtin", "FIBONACCI", "-n", "50")
    assert json.loads(out) == {"verdict": "consistent_with_linear", "checked_up_to": 50}


def test_decompose(capsys):
    code, out, err = run(capsys, "decompose", "--builtin", "U")
    assert code == 2 and out == "" and "witness" in err and "chained" in err
    code, out, _ = run(capsys, "decompose", "--builtin", "BAAB")
    doc = json.loads(out)
    assert code == 0 and doc["cover_check"] == {"mode": "formal", "ok": True}
    code, out, _ = run(capsys, "decompose", "--builtin", "AKB", "--mode", "sampled")
    assert code == 0 and json.loads(out)["cover_check"]["ok"]
    code, _, err = run(capsys, "decompose", "--builtin", "FIBONACCI")
    assert code == 2


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    names = [l.split()[0] for l in out.splitlines() if not l.startswith(" ")]
    assert code == 0 and names == ["U", "AAABBB", "BAAB", "MIX", "AKB", "FIBONACCI", "THUEMORSE"]


def test_verify_suite(capsys, tmp_path):
    target = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "verify", "--suite", "convolution", "--count", "5", "--out", str(target))
    assert code == 0 and "failures: 0" in out
    lines = target.read_text().splitlines()
    assert len(lines) == 5 and all(json.loads(l)["outcome"] == "pass" for l in lines)
    code, out, _ = run(capsys, "verify", "--suite", "convolution", "--count", "2")
    assert code == 0 and out.count('"check": "convolution"') == 2


def test_verify_exit_1_on_failure(capsys, monkeypatch):
    from subcomplexity import verifier
    from subcomplexity.verifier import CheckReport
    monkeypatch.setitem(verifier.SUITES, "gap", lambda seed, count: iter([CheckReport("gap", "x", "fail",
                                                                                      {"counterexample": 1})]))
    code, out, _ = run(capsys, "verify", "--suite", "gap")
    assert code == 1 and "failures: 1" in out


def test_cap_exit_3(capsys, monkeypatch):
    from subcomplexity import automata, complexity
    def boom(*a, **k):
        raise automata.CapExceeded("determinization cap exceeded")
    complexity._factor_dfa.cache_clear()
    monkeypatch.setattr(complexity, "_factor_dfa", boom)
    code, out, err = run(capsys, "profile", "--builtin", "U")
    assert code == 3 and out == "" and "cap" in err


def test_output_determinism(capsys):
    first = run(capsys, "verify", "--suite", "claims", "--count", "10")
    second = run(capsys, "verify", "--suite", "claims", "--count", "10")
    assert first == second
