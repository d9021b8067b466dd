import json
import subprocess
import sys

import pytest

from ubiquity.cli import main

K = {"domain": ["a", "b"], "opens": [["a"], ["a", "b"]], "predicates": {"P": [["a"]]}}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def jsonl(out):
    return [json.loads(line) for line in out.splitlines()]


def test_check_valid(capsys):
    code, out, _ = run(capsys, "check", "U x P(x) -> exists x P(x)", "--max-domain", "3")
    assert code == 0
    assert "valid up to bound" in out


def test_check_invalid_json(capsys):
    code, out, _ = run(capsys, "check", "U x P(x) -> U x Q(x)", "--max-domain", "2", "--format", "json")
    assert code == 1
    (rec,) = jsonl(out)
    assert rec["v"] == 1 and rec["status"] == "invalid"
    assert rec["countermodel"] == {"domain": ["a"], "opens": [["a"]], "predicates": {"P": [["a"]], "Q": []}}


def test_check_from_file(capsys, tmp_path):
    f = tmp_path / "phi.txt"
    f.write_text("forall x P(x) -> U x P(x)\n")
    code, out, _ = run(capsys, "check", "--file", str(f), "--max-domain", "2")
    assert code == 0


def test_model(capsys, tmp_path):
    path = tmp_path / "k.json"
    path.write_text(json.dumps(K))
    assert run(capsys, "model", str(path), "U x P(x)")[:2] == (0, "true\n")
    assert run(capsys, "model", str(path), "U x ~P(x)")[:2] == (0, "false\n")
    code, out, _ = run(capsys, "model", str(path), "P(x)", "--assign", "x=b", "--format", "json")
    assert jsonl(out)[0]["value"] is False


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "spaces", "--size", "2")
    assert code == 0 and out.strip().endswith(": 3")
    code, out, _ = run(capsys, "enumerate", "upsilons", "--size", "2", "--format", "json")
    assert jsonl(out)[-1]["count"] == 9
    code, out, _ = run(capsys, "enumerate", "quantifiers", "--size", "3", "--list", "--format", "json")
    recs = jsonl(out)
    assert len(recs) == 6 and recs[-1]["count"] == 5


@pytest.mark.parametrize("suite,size", [("funcalg", 2), ("monadic", 3), ("ubiq", 2)])
def test_laws(capsys, suite, size):
    code, out, _ = run(capsys, "laws", "--suite", suite, "--size", str(size), "--format", "json")
    assert code == 0
    (rec,) = jsonl(out)
    assert rec["kind"] == "report"


def test_quotient_check(capsys):
    code, out, _ = run(capsys, "quotient-check", "--size", "2", "--format", "json")
    recs = jsonl(out)
    assert code == 0
    assert recs[-1]["kind"] == "audit"
    assert all(r["kind"] == "descent" for r in recs[:-1])


def test_axioms(capsys):
    code, out, _ = run(capsys, "axioms", "--max-domain", "2")
    assert code == 0 and out.count("[PASS]") == 9


def test_errors(capsys, tmp_path):
    code, _, err = run(capsys, "check", "U x P(x")
    assert code == 2 and "1:8" in err
    code, _, err = run(capsys, "model", str(tmp_path / "missing.json"), "P")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "enumerate", "spaces", "--size", "5")
    assert code == 2 and "limited" in err


def test_unsafe_size_prints_estimate(capsys):
    code, _, err = run(capsys, "laws", "--suite", "funcalg", "--size", "1", "--unsafe-size")
    assert code == 0
    assert err.startswith("estimated cost:")


def test_deterministic_output(capsys):
    argv = ["check", "U x P(x) -> forall x P(x)", "--max-domain", "2", "--format", "json"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ubiquity.cli", "enumerate", "spaces", "--size", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "spaces (size 3): 16"
