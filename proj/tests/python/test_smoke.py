"""Smoke tests for the python module and the installed CLI."""

import json
import math
import os
import subprocess
from fractions import Fraction

import pytest

import symrep


def test_partitions():
    assert symrep.partitions(3) == ["3", "2,1", "1,1,1"]
    assert len(symrep.partitions(8)) == 22


def test_dimensions():
    assert symrep.dim("3,2") == 5
    assert symrep.dim("2,2/1") == 2
    assert sum(symrep.dim(p) ** 2 for p in symrep.partitions(5)) == math.factorial(5)


def test_tableaux_and_contents():
    tabs = symrep.tableaux("2,1")
    assert [t["rows"] for t in tabs] == ["1,2;3", "1,3;2"]
    assert tabs[0]["content"] == [0, 1, -1]
    assert symrep.content_vector("2,1", "1,3;2") == [0, -1, 1]


def test_content_validation():
    assert symrep.is_content_vector([0, -1, 1])
    assert symrep.validate_content([0, -1, 1]) is None
    bad = symrep.validate_content([0, 1, 0])
    assert bad["condition"] == 3 and bad["index"] == 3
    assert symrep.validate_content([1, 0])["condition"] == 1
    shape, rows = symrep.tableau_from_content([0, 1, -1])
    assert (shape, rows) == ("2,1", "1,2;3")
    with pytest.raises(ValueError):
        symrep.tableau_from_content([0, 2])


def test_matrices():
    block = symrep.coxeter_matrix("2,1", 2)
    assert block["rows"] == [["-1/2", "3/4"], ["1", "1/2"]]
    ortho = symrep.coxeter_matrix("2,1", 2, form="orthogonal")
    assert ortho["rows"][0][0] == pytest.approx(-0.5)
    assert ortho["rows"][0][1] == pytest.approx(math.sqrt(3) / 2)
    diag = symrep.yjm_matrix("2,1", 2)
    assert diag["rows"] == [["1", "0"], ["0", "-1"]]
    full = symrep.permutation_matrix("2,1", "(1 3)")
    assert sum(Fraction(full["rows"][i][i]) for i in range(2)) == 0


def test_characters():
    assert symrep.character("2,1", "3") == -1
    assert symrep.character("2,2", "4") == 0
    assert symrep.character("2,2/1", "3") == -1
    table = symrep.character_table(3)
    assert table["values"][1] == [2, 0, -1]
    assert table["cycle_types"][0] == "1,1,1"


def test_spectrum():
    grouped = symrep.spectrum(3)
    assert len(grouped["2,1"]) == 2
    points = symrep.spectrum_bruteforce(3)
    assert ([0, 1, 2], 1) in [(list(w), m) for w, m in points]
    # the regular module splits into dim-many copies of each eigenline
    assert sum(m for _, m in points) == math.factorial(3)


def test_graph_helpers():
    parents, children = symrep.young_neighbors("2,1")
    assert parents == ["2", "1,1"]
    assert children == ["3,1", "2,2", "2,1,1"]
    assert symrep.skew_hook_height("2,2/1") == 1
    assert symrep.skew_hook_height("2,2") is None


def test_verify_small():
    report = symrep.verify(3)
    assert report and all(r["status"] == "pass" for r in report)


@pytest.mark.skipif("SYMREP_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_contract():
    cli = os.environ["SYMREP_CLI"]

    def run(*args):
        return subprocess.run([cli, *args], capture_output=True, text=True)

    assert run("dim", "3,2").stdout.strip() == "5"
    assert run("character", "2,1", "3").stdout.strip() == "-1"

    matrix = json.loads(run("matrix", "2,1", "--gen", "2", "--json").stdout)
    assert list(matrix.keys()) == ["shape", "form", "basis", "generator", "rows"]
    assert matrix["rows"] == [["-1/2", "3/4"], ["1", "1/2"]]

    usage = run("dim", "not-a-shape")
    assert usage.returncode == 2

    cap = run("partitions", "100")
    assert cap.returncode == 3

    table = run("char-table", "2", "--csv").stdout.splitlines()
    assert table[0] == 'shape,"1,1","2"'
    assert table[1] == '"2",1,1'
