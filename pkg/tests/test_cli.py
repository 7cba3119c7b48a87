import csv
import io
import json
import re

import pytest

from eo_strata import __version__
from eo_strata.launcher.main import COMMANDS, EXIT_INTERNAL_ERROR, EXIT_VERIFICATION_FAILED, main
from eo_strata.launcher.render import FIELDS, render_text_value, stratum_row
from eo_strata.strata.core import enumerate_final_types


@pytest.fixture
def run_cli(app_dirs, capsys):
    def run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return run


def test_enumerate_text(run_cli):
    code, out, _ = run_cli("enumerate", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[0].split() == list(FIELDS)
    assert "L²" in out and "I₁,₁²" in out


def test_enumerate_json(run_cli):
    code, out, _ = run_cli("enumerate", "4", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 16
    assert [record["nu"] for record in records][:2] == [[0, 0, 0, 0], [0, 0, 0, 1]]
    assert records[0]["name"] == "I[1,1]^4"
    assert all(record["cycle_class"] is None or record["a"] <= 1 for record in records)
    assert {tuple(record) for record in records} == {FIELDS}


@pytest.mark.parametrize("g", ["0", "13", "two"])
def test_enumerate_rejects_g(run_cli, g):
    code, out, _ = run_cli("enumerate", g)
    assert code == 2
    assert out == ""


def test_describe_name(run_cli):
    code, out, _ = run_cli("describe", "I[3,2]", "--format", "json")
    assert code == 0
    [record] = json.loads(out)
    assert record["name"] == "I[3,2]"
    assert (record["g"], record["codim"], record["f"], record["a"]) == (3, 4, 0, 2)
    assert record["nu"] == [0, 1, 1]
    assert record["mu"] == [3, 1]
    assert record["omega_word"] == [2, 3]
    assert record["dim"] == 2
    assert record["cycle_class"] == "(p-1)**2*(p**2-p+1)*l1*l3"


def test_describe_final_type(run_cli):
    code, out, _ = run_cli("describe", "nu=[0,0,1,1]", "-g", "4", "--format", "json")
    assert code == 0
    [record] = json.loads(out)
    assert record["name"] == "I[4,3]"
    assert record["mu"] == [4, 3, 1]


def test_describe_text(run_cli):
    code, out, _ = run_cli("describe", "mu={2}", "-g", "3")
    assert code == 0
    values = dict(line.split(None, 1) for line in out.splitlines())
    assert values["name"] == "L ⊕ I₂,₁"
    assert values["nu"] == "[1,1,2]"
    assert values["omega_word"] == "s3*s1*s2*s3"
    assert values["cycle_class"] == "(p-1)(p^2-1)λ2"


@pytest.mark.parametrize("text", ["I[2,2]", "L^2+", "nu=[0,2]", "I[1,1]+X"])
def test_describe_rejects_input(run_cli, text):
    code, out, err = run_cli("describe", text)
    assert code == 2
    assert out == ""
    assert err.startswith("ERROR: ")


def test_describe_shows_module_and_filtration(run_cli):
    code, out, _ = run_cli("describe", "I[2,1]", "--show-module", "--show-filtration")
    assert code == 0
    assert "Dieudonne module, g=2" in out
    assert "Canonical filtration" in out
    assert "Refined filtration, final type [0,1]" in out
    assert "N'_g = FD = " in out


def test_describe_without_name(run_cli):
    code, out, err = run_cli("describe", "nu=[0,1,2,3,4]", "--format", "json")
    assert code == 0
    [record] = json.loads(out)
    assert record["name"] is None
    assert record["mu"] == [5]
    assert "No name is tabulated" in err


def test_describe_with_mismatching_g(run_cli):
    code, _, err = run_cli("describe", "I[3,2]", "-g", "4")
    assert code == 2
    assert "g=3" in err


@pytest.mark.parametrize("argv, expected", [
    (("convert", "I[3,2]", "--to", "nu"), "[0,1,1]"),
    (("convert", "I[3,2]", "--to", "mu"), "{3,1}"),
    (("convert", "mu={3,1}", "-g", "3", "--to", "name"), "I[3,2]"),
    (("convert", "nu=[0,1,2,2]", "--to", "name"), "I[4,2]"),
    (("convert", "nu=[1,2,3]", "--to", "word"), "s3*s2*s3*s1*s2*s3"),
    (("convert", "word=s2*s3", "-g", "3", "--to", "nu"), "[0,1,1]"),
    (("convert", "nu=[0,0]", "--to", "word"), "1"),
])
def test_convert(run_cli, argv, expected):
    code, out, _ = run_cli(*argv)
    assert code == 0
    assert out == expected + "\n"


def test_convert_all(run_cli):
    code, out, _ = run_cli("convert", "I[2,1]")
    assert code == 0
    values = dict(line.split("=", 1) for line in out.splitlines())
    assert set(values) == {"name", "nu", "mu", "omega", "word"}
    assert values["nu"] == "[0,1]"
    assert values["mu"] == "{2}"
    assert values["word"] == "s2"


def test_word_needs_g(run_cli):
    code, _, _ = run_cli("convert", "word=s1")
    assert code == 2


def test_table_csv(run_cli):
    code, out, _ = run_cli("table", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 9
    assert tuple(rows[0]) == FIELDS
    codims = [int(row[FIELDS.index("codim")]) for row in rows[1:]]
    assert codims == sorted(codims)
    assert rows[1][FIELDS.index("name")] == "L^3"
    assert rows[-1][FIELDS.index("nu")] == "[0,0,0]"


def test_hasse_dot(run_cli):
    code, out, _ = run_cli("hasse", "4", "--format", "dot", "--names")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "digraph hasse_g4 {"
    assert sum(1 for line in lines if "->" in line) == 20
    assert sum(1 for line in lines if "[label=" in line) == 16
    assert "I[4,3]" in out


def test_hasse_text(run_cli):
    code, out, _ = run_cli("hasse", "2")
    assert code == 0
    assert set(out.splitlines()) == {"∅ -> {1}", "{1} -> {2}", "{2} -> {2,1}"}


def test_hasse_json(run_cli):
    code, out, _ = run_cli("hasse", "3", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["g"] == 3
    assert len(document["nodes"]) == 8
    assert [[], [1]] in document["edges"]


def test_verify(run_cli):
    code, out, _ = run_cli("verify")
    assert code == 0
    assert out.startswith("verify: all ")
    assert out.rstrip().endswith("checks passed for 30 tabulated types")


def test_output_is_deterministic(run_cli):
    first = run_cli("table", "4", "--format", "json")
    second = run_cli("table", "4", "--format", "json")
    assert first == second


def test_version(run_cli):
    code, out, _ = run_cli("--version")
    assert code == 0
    assert __version__ in out


def test_missing_command(run_cli):
    code, _, err = run_cli()
    assert code == 2
    assert "command" in err


def _csv_value(field, text):
    if text == "":
        return None
    if text.startswith("["):
        return json.loads(text)
    if field in ("g", "codim", "f", "a", "dim"):
        return int(text)
    return text


def test_formats_contain_the_same_records(run_cli):
    expected = [stratum_row(final) for final in enumerate_final_types(3)]

    _, out, _ = run_cli("enumerate", "3", "--format", "json")
    assert json.loads(out) == expected

    _, out, _ = run_cli("enumerate", "3", "--format", "csv")
    header, *rows = list(csv.reader(io.StringIO(out)))
    assert [{field: _csv_value(field, cell) for field, cell in zip(header, row)} for row in rows] == expected

    _, out, _ = run_cli("enumerate", "3", "--format", "text")
    lines = out.splitlines()[2:]
    assert len(lines) == len(expected)
    for line, record in zip(lines, expected):
        cells = re.split(r"\s{2,}", line.strip())
        assert cells == [render_text_value(field, record[field], record["g"]) for field in FIELDS]


def test_unexpected_error_exit_code(run_cli, monkeypatch):
    def broken(args, out):
        raise RuntimeError("broken command")

    monkeypatch.setitem(COMMANDS, "verify", broken)
    code, out, err = run_cli("verify")
    assert code == EXIT_INTERNAL_ERROR != EXIT_VERIFICATION_FAILED
    assert out == ""
    assert "main() function quit exceptionally" in err
