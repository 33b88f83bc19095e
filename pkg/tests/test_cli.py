import csv
import io
import json
import subprocess
import sys

import pytest

from bsymbol import cli
from bsymbol.gf import make_field
from bsymbol.linear_code import LinearCode, code_to_json, rs_code
from bsymbol.weights import CLOSED_FORM, WeightDistribution


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dist_json_rs_6_4_11(capsys):
    code, out, _ = run(capsys, "dist", "--q", "11", "--n", "6", "--k", "4", "--b", "3",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["counts"] == {"0": "1", "1": "0", "2": "0", "3": "0", "4": "0",
                             "5": "60", "6": "14580"}
    assert obj["total"] == "14641"
    assert obj["query"] == {"q": 11, "n": 6, "k": 4, "d": 3, "b": 3}
    assert obj["mode"] == CLOSED_FORM


def test_dist_text_hamming(capsys):
    code, out, _ = run(capsys, "dist", "--q", "11", "--n", "6", "--k", "4", "--b", "1")
    assert code == 0
    rows = dict(line.split() for line in out.splitlines()[1:])
    assert rows["3"] == "200" and rows["total"] == "14641"


def test_dist_csv(capsys):
    code, out, _ = run(capsys, "dist", "--q", "7", "--d", "3", "--n", "5", "--b", "2",
                       "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["w"] for r in rows] == [str(w) for w in range(6)]
    assert sum(int(r["count"]) for r in rows) == 7**3


def test_dist_invalid_length(capsys):
    code, _, err = run(capsys, "dist", "--q", "5", "--n", "6", "--k", "2", "--b", "2")
    assert code == 2
    assert "n exceeds field order" in err


@pytest.mark.parametrize("argv", [
    ["dist", "--q", "6", "--n", "4", "--k", "2", "--b", "2"],
    ["dist", "--q", "7", "--n", "4", "--k", "2"],
    ["dist", "--q", "7", "--n", "4", "--k", "2", "--d", "2", "--b", "2"],
    ["dist", "--p", "2", "--m", "2", "--modulus", "1,0,1", "--n", "3", "--k", "2", "--b", "2"],
    ["dist", "--q", "7", "--n", "4", "--k", "2", "--b", "0"],
    ["f-value", "--q", "11", "--d", "3", "--b", "3", "--lengths", "1,1"],
    ["nonsense"],
])
def test_invalid_input_exit_code(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(cli.main(argv))
    assert exc.value.code == 2


def test_resource_bound_exit_code(capsys):
    code, _, err = run(capsys, "dist", "--q", "11", "--n", "8", "--k", "7", "--b", "2",
                       "--mode", "brute", "--max-enum", "1000")
    assert code == 3 and "exceed" in err


def test_dist_both_modes(capsys):
    code, out, _ = run(capsys, "dist", "--p", "3", "--m", "2", "--modulus", "1,0,1",
                       "--n", "6", "--k", "3", "--b", "3", "--mode", "both")
    assert code == 0
    assert "brute-force" in out.splitlines()[0]


def test_verify_rs_6_4_11(capsys):
    code, out, _ = run(capsys, "verify", "--q", "11", "--n", "6", "--k", "4", "--b", "3")
    assert code == 0
    assert out.strip().splitlines()[-1] == "MATCH (7 weights, 14641 codewords)"
    assert "FAIL" not in out


@pytest.mark.parametrize("argv", [
    ["--q", "7", "--n", "6", "--k", "3", "--b", "2"],
    ["--q", "11", "--n", "6", "--k", "4", "--b", "7"],
])
def test_verify_grid_and_trivial_regime(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    assert code == 0 and "MATCH" in out


def test_verify_reports_mismatch(capsys, monkeypatch):
    real = cli.b_distribution

    def off_by_one(query):
        dist = real(query)
        counts = dict(dist.counts)
        counts[query.n] += 1
        return WeightDistribution(dist.query, counts, dist.mode)

    monkeypatch.setattr(cli, "b_distribution", off_by_one)
    code, out, _ = run(capsys, "verify", "--q", "7", "--n", "5", "--k", "2", "--b", "2")
    assert code == 1
    assert "MISMATCH at w=5" in out


def test_table_text_and_json(capsys):
    code, out, _ = run(capsys, "table", "--q", "11", "--n", "6", "--k", "4", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 6
    row3 = next(r for r in rows if r["b"] == "3")
    assert row3["5"] == "60" and row3["6"] == "14580"

    code, out, _ = run(capsys, "table", "--q", "11", "--n", "6", "--k", "4", "--format", "json")
    assert code == 0 and [r["b"] for r in json.loads(out)["rows"]] == [1, 2, 3, 4, 5, 6]

    code, out, _ = run(capsys, "table", "--q", "11", "--n", "6", "--k", "4")
    assert code == 0 and "14580" in out


def test_table_brute_matches_closed(capsys):
    _, closed, _ = run(capsys, "table", "--q", "7", "--n", "5", "--k", "3", "--format", "csv")
    _, brute, _ = run(capsys, "table", "--q", "7", "--n", "5", "--k", "3", "--format", "csv",
                      "--mode", "brute")
    strip = lambda text: [r[:1] + r[2:] for r in csv.reader(io.StringIO(text))]  # noqa: E731
    assert strip(closed) == strip(brute)


@pytest.mark.parametrize("lengths,value", [("3", "10"), ("4", "100"), ("1,3", "90")])
def test_f_value(capsys, lengths, value):
    code, out, _ = run(capsys, "f-value", "--q", "11", "--d", "3", "--b", "3",
                       "--lengths", lengths)
    assert code == 0 and out.strip() == value


def test_f_value_brute(capsys):
    code, out, _ = run(capsys, "f-value", "--q", "11", "--d", "3", "--b", "2",
                       "--lengths", "2,3", "--brute")
    assert code == 0
    assert "MATCH" in out and "830" in out


def test_input_matrix(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(code_to_json(rs_code(make_field(7), 5, 2), assert_mds=True)))
    code, out, _ = run(capsys, "verify", "--input", str(path), "--b", "2")
    assert code == 0 and "MATCH" in out


def test_input_matrix_non_mds_brute_only(tmp_path, capsys):
    f = make_field(2)
    path = tmp_path / "g.json"
    path.write_text(json.dumps(code_to_json(LinearCode(f, [[1, 1, 0, 0], [0, 0, 1, 1]]))))
    code, out, _ = run(capsys, "dist", "--input", str(path), "--b", "2", "--mode", "brute",
                       "--format", "json")
    assert code == 0 and json.loads(out)["total"] == "4"
    code, _, err = run(capsys, "dist", "--input", str(path), "--b", "2")
    assert code == 2 and "MDS" in err


def test_console_script_module_entry():
    proc = subprocess.run([sys.executable, "-m", "bsymbol.cli", "f-value", "--q", "11",
                           "--d", "3", "--b", "3", "--lengths", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "100"
