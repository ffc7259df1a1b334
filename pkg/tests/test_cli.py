import subprocess
import sys

import pytest

from chainthm import families as fam
from chainthm.cli import run
from chainthm.graph import complete_graph, complete_multipartite
from chainthm.graph6 import encode


@pytest.fixture
def gfile(tmp_path):
    def make(*graphs, extra=""):
        p = tmp_path / "in.g6"
        p.write_text("# test input\n" + "".join(encode(g) + "\n" for g in graphs) + extra)
        return str(p)

    return make


def test_check_w5(gfile, capsys):
    f = gfile(fam.wheel(5))
    assert run(["check", f, "--class", "q4c"]) == 0
    assert capsys.readouterr().out.split()[-1] == "true"
    assert run(["check", f, "--class", "w4c"]) == 1
    out = capsys.readouterr().out.splitlines()
    assert out[0].endswith("false")
    assert out[1].strip().startswith("cut {") and "sideA {" in out[1] and "sideB {" in out[1]


@pytest.mark.parametrize("cls,expected", [("3c", 0), ("4c", 0), ("i4c-cubic", 1)])
def test_check_classes(gfile, capsys, cls, expected):
    assert run(["check", gfile(complete_graph(5)), "--class", cls]) == expected


def test_recognize_k5(gfile, capsys):
    assert run(["recognize", gfile(complete_graph(5))]) == 0
    out = capsys.readouterr().out.strip()
    assert out.split(" ", 1)[1] == "squared-cycle(5) biwheel(3,axle) small-3-connected"


def test_chain_and_verify(gfile, tmp_path, capsys):
    out = tmp_path / "c.txt"
    assert run(["chain", gfile(complete_multipartite(1, 2, 2, 2)), "--theorem", "4c", "--out", str(out)]) == 0
    assert out.read_text().startswith("theorem 4c\ng0 ")
    assert run(["verify-chain", str(out)]) == 0
    assert "result pass" in capsys.readouterr().out
    lines = out.read_text().splitlines()
    # corrupt the last stored graph
    lines[-1] = lines[-1].rsplit(" ", 1)[0] + " " + encode(complete_graph(6))
    out.write_text("\n".join(lines) + "\n")
    assert run(["verify-chain", str(out)]) == 1


def test_chain_ineligible(gfile, capsys):
    assert run(["chain", gfile(fam.biwheel(5)), "--theorem", "4c"]) == 2


def test_input_errors(gfile, tmp_path, capsys):
    assert run(["check", gfile(extra="C!\n"), "--class", "3c"]) == 2
    assert "line 2" in capsys.readouterr().err
    assert run(["check", str(tmp_path / "missing"), "--class", "3c"]) == 2
    assert run(["check", gfile(), "--class", "5c"]) == 2
    assert run(["verify-theorem", "--theorem", "q4c", "--max-n", "12"]) == 2
    assert run([]) == 2


def test_verify_theorem_and_seed(capsys):
    assert run(["verify-theorem", "--theorem", "w4c", "--max-n", "6", "--seed", "7", "--no-timing"]) == 0
    first = capsys.readouterr().out
    assert run(["--seed", "1", "verify-theorem", "--theorem", "w4c", "--max-n", "6", "--no-timing"]) == 0
    assert capsys.readouterr().out == first
    assert "result pass" in first


def test_verify_lemma(capsys):
    assert run(["verify-lemma", "--id", "pyramid-unique", "--max-n", "7"]) == 0
    assert "count.classes 1" in capsys.readouterr().out


def test_generate(tmp_path, capsys):
    out = tmp_path / "cat.g6"
    assert run(["generate", "--theorem", "q4c", "--max-n", "7", "--out", str(out)]) == 0
    lines = out.read_text().split()
    assert len(lines) == 74 and lines == sorted(lines)
    assert run(["generate", "--theorem", "q4c", "--max-n", "7", "--mode", "degree-only"]) == 2


def test_module_entry_point(gfile):
    proc = subprocess.run([sys.executable, "-m", "chainthm", "recognize", gfile(fam.pyramid())],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "pyramid" in proc.stdout
