import json
import subprocess
import sys

import pytest

from boxlat import verify as V
from boxlat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_show(capsys):
    code, out, _ = run(capsys, "show", "box(M3, N5)")
    assert code == 0
    assert "elements: 41" in out and "distributive: no" in out


def test_json_and_out(capsys, tmp_path):
    code, out, _ = run(capsys, "--json", "box", "M3", "chain(2)")
    assert code == 0
    assert len(json.loads(out)["elements"]) == 5
    path = tmp_path / "n5.dot"
    code, out, _ = run(capsys, "ltp", "N5", "chain(2)", "--dot", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("digraph")


def test_tensor_capped(capsys):
    code, out, _ = run(capsys, "tensor", "M3", "N5", "--check-capped")
    assert code == 0 and "capped: yes" in out


def test_con(capsys):
    code, out, _ = run(capsys, "con", "N5")
    assert code == 0
    assert out.startswith("Con(N5): 5 congruences")
    doc = json.loads(out[out.index("{"):])
    assert len(doc["elements"]) == 5


def test_triples(capsys):
    code, out, _ = run(capsys, "m3", "chain(3)")
    assert code == 0 and "elements: 12" in out
    code, out, _ = run(capsys, "m3", "N5", "--angle")
    assert code == 0
    code, out, _ = run(capsys, "n5", "chain(2)")
    assert "elements: 5" in out


def test_embed(capsys):
    code, out, _ = run(capsys, "embed", "M3", "N5")
    assert code == 0 and "result: pass" in out
    code, _, err = run(capsys, "embed", "N5", "M3")
    assert code == 2 and "NotSimple" in err


def test_verify_lines(capsys):
    code, out, _ = run(capsys, "verify", "iso_zero", "M3", "N5")
    assert code == 0
    rec = json.loads(out)
    assert rec["result"] == "pass" and rec["lattices"] == ["M3", "N5"]
    code, out, _ = run(capsys, "verify", "all", "--max-size", "2")
    assert code == 0
    lines = [json.loads(ln) for ln in out.splitlines()]
    assert lines and all(r["result"] == "pass" for r in lines)


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(A, B):
        return V.VerificationReport("duality", (A.name, B.name), False, {"confirmed": True})

    monkeypatch.setitem(V.CHECKS, "duality", failing)
    code, out, _ = run(capsys, "verify", "duality", "M3", "N5")
    assert code == 1 and json.loads(out)["result"] == "fail"


@pytest.mark.parametrize("argv,needle", [
    (["show", "box(M3"], "^"),
    (["show", "nope"], "UnknownName"),
    (["--max-elements", "10", "box", "M3", "N5"], "SizeCapExceeded"),
    (["verify", "collapse", "M3", "N5"], "PreconditionNotMet"),
])
def test_input_errors(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2 and needle in err


@pytest.mark.parametrize("argv", [["verify", "nosuch"], ["verify", "iso_zero", "M3"],
                                  ["verify", "all", "M3"], ["frobnicate"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "boxlat.cli", "show", "N5"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "elements: 5" in out.stdout
