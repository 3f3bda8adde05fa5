import json
import subprocess
import sys

import pytest

from srpowers.certificates import parse_certificate
from srpowers.cli import main

C5 = "complex n=5 {1 2} {2 3} {3 4} {4 5} {1 5}\n"
PATH_IDEAL = "ideal n=4: x1*x2, x2*x3, x3*x4\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {"c5": C5, "path": PATH_IDEAL, "split": "complex n=4 {1 2} {3 4}\n", "bad": "complex n=3 {1 2\n"}.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        out[name] = str(p)
    return out


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_predicates(files, capsys):
    assert run(["check", files["c5"], "--predicate", "matroid"], capsys)[:2] == (2, "matroid: false\n")
    assert run(["check", files["c5"], "--predicate", "diam"], capsys)[:2] == (0, "diameter: 2\n")
    assert run(["check", files["split"], "--predicate", "diam"], capsys)[1] == "diameter: infinite\n"
    code, out, _ = run(["check", files["path"], "--predicate", "cm", "--field", "0", "--field", "2"], capsys)
    assert code == 0 and out == "cohen-macaulay over Q: true\ncohen-macaulay over F2: true\n"


def test_check_clean_prints_certificate(files, capsys):
    code, out, _ = run(["check", files["path"], "--predicate", "clean", "--certificate"], capsys)
    assert code == 0
    head, cert = out.split("\n", 1)
    assert head == "clean: true"
    assert parse_certificate(cert).revalidate()


def test_power_dual_polarize(files, capsys):
    assert run(["power", files["path"], "--m", "2"], capsys)[1].startswith("ideal n=4: x1^2*x2^2,")
    code, out, _ = run(["power", files["c5"], "--m", "2", "--symbolic"], capsys)
    assert code == 0 and out.startswith("ideal n=5:")
    assert run(["dual", files["path"]], capsys)[1] == "ideal n=4: x1*x3, x2*x3, x2*x4\n"
    out = run(["polarize", files["path"]], capsys)[1]
    assert out.splitlines()[1] == "# x1=x1_1 x2=x2_1 x3=x3_1 x4=x4_1"


def test_shelling_command(files, capsys):
    code, out, _ = run(["shelling", files["c5"]], capsys)
    assert code == 0 and parse_certificate(out).revalidate()
    assert run(["shelling", files["split"]], capsys)[:2] == (2, "not shellable\n")


def test_audit_and_sweep(files, tmp_path, capsys):
    code, out, _ = run(["audit", "--theorem", "ex2.5"], capsys)
    assert code == 0 and json.loads(out)["consistent"]
    jsonl, summary = tmp_path / "out.jsonl", tmp_path / "summary.csv"
    code = main(["sweep", "--theorem", "cor2.6", "--n", "4", "--d", "1", "--out", str(jsonl), "--summary", str(summary)])
    assert code == 0
    assert summary.read_text().splitlines()[-1] == "cor2.6,1,3,all,45,0"
    assert len(jsonl.read_text().splitlines()) == 45


def test_errors(files, capsys):
    code, _, err = run(["check", files["bad"], "--predicate", "matroid"], capsys)
    assert code == 1 and "line 2" in err
    assert run(["sweep", "--theorem", "cor2.4", "--n", "6"], capsys)[0] == 1
    assert run(["power", files["path"], "--m", "0"], capsys)[0] == 1
    assert run(["frobnicate"], capsys)[0] == 1
    assert run(["check", "/nonexistent", "--predicate", "ci"], capsys)[0] == 1


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "srpowers", "check", files["c5"], "--predicate", "ci"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout == "complete intersection: false\n"


def test_warning_goes_to_stderr(tmp_path, capsys):
    p = tmp_path / "dup.txt"
    p.write_text("ideal n=2: x1, x1*x2\n")
    code, out, err = run(["dual", str(p)], capsys)
    assert code == 0 and "warning:" in err
