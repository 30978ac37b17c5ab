import io
import json
import subprocess
import sys

import pytest

from stacktrees.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_distance_worked_example():
    assert call("distance", "31264587", "1524376") == (0, "3\n", "")
    code, out, _ = call("distance", "31264587", "1524376", "--trace")
    lines = out.splitlines()
    assert lines[0] == "3" and len(lines[1].split()[1]) == 6


@pytest.mark.parametrize("oracle", ["bfs", "pattern"])
def test_distance_oracles(oracle):
    assert call("distance", "31264587", "1524376", "--oracle", oracle)[1] == "3\n"


def test_distance_bfs_cap():
    assert call("distance", "123", "321", "--oracle", "bfs", "--cap", "3")[1] == "> 3\n"


def test_distance_accepts_comma_form_and_trees():
    assert call("distance", "3,1,2,6,4,5,8,7", "1,5,2,4,3,7,6")[1] == "3\n"
    assert call("distance", "(()())", "((()))")[1] == "2\n"


def test_factors_complete():
    code, out, _ = call("factors", "1524376", "--complete")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 11
    assert [line.split("\t")[1] for line in lines] == [
        "1", "15243", "1524376", "5243", "524376", "2", "243", "43", "3", "76", "6",
    ]


def test_factors_compact_classify():
    code, out, _ = call("factors", "1524376", "--compact", "--classify")
    assert "2:2\t5\tInternalPath 2" in out.splitlines()
    assert "4:5\t43\tSubtree" in out.splitlines()


def test_series_text_and_json():
    code, out, _ = call("series", "s2", "--n", "4")
    assert out.strip() == (
        "x + x^2 + x^2*y^2 + x^3 + 3*x^3*y^2 + x^3*y^4"
        " + x^4 + 5*x^4*y^2 + 7*x^4*y^4 + x^4*y^6"
    )
    code, out, _ = call("series", "s1", "--n", "3", "--json")
    data = json.loads(out)
    assert data["vars"] == ["t", "q"]
    assert [3, 2, "3"] in data["coeffs"]


@pytest.mark.parametrize("kind", ["s1", "s2", "i", "d", "narayana"])
def test_series_byte_stable(kind):
    first = call("series", kind, "--n", "6", "--json")
    assert first[0] == 0
    assert first == call("series", kind, "--n", "6", "--json")


def test_check_exit_codes():
    code, out, _ = call("check", "231")
    assert code == 1 and "231" in out and "1,2,3" in out
    assert call("check", "1524376")[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ("decode", "231"),
        ("decode", "1224"),
        ("encode", "(()"),
        ("insert", "1524376", "--span", "2:3"),
        ("delete", "123", "--pos", "4"),
        ("series", "s2", "--n", "100"),
        ("nonsense",),
    ],
)
def test_bad_input_exits_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_codec_commands():
    assert call("encode", "((()))")[1] == "321\n"
    assert call("decode", "1524376")[1] == "()(()(()))(())\n"
    assert call("encode", "")[1] == "()\n"


def test_edit_commands():
    assert call("delete", "31264587", "--value", "1")[1] == "2153476\n"
    assert call("delete", "31264587", "--pos", "2")[1] == "2153476\n"
    assert call("insert", "1524376", "--op", "inner", "--span", "4:5")[1] == "16254387\n"
    assert call("insert", "1524376", "--op", "right", "--span", "4:5")[1] == "16243587\n"
    assert call("insert", "1524376", "--op", "left", "--span", "4:5")[1] == "16235487\n"
    assert call("neighbors", "1")[1] == "()\n12\n21\n"


def test_stats_and_avg():
    assert call("stats", "1524376")[1] == "lis 4\nlds 3\nleaves 4\nheight 3\n"
    assert call("avg", "--target", "id", "--n", "7")[1] == "6\n"
    out = call("avg", "--target", "chain", "--n", "3")[1]
    assert out.startswith("2 ~ 2.000000")


def test_out_file(tmp_path):
    target = tmp_path / "d.txt"
    code, out, _ = call("--out", str(target), "distance", "31264587", "1524376")
    assert code == 0 and out == "" and target.read_text() == "3\n"


def test_verify_all():
    code, out, _ = call("verify", "--suite", "all", "--max-n", "7")
    assert code == 0 and out and "FAIL" not in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stacktrees", "distance", "31264587", "1524376"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "3\n"
