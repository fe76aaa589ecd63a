import csv
import io
import json
import subprocess
import sys

import pytest

from whittaker import cli

KEYS = {"target", "params", "x", "value", "abs_err_est", "route", "citations"}


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_m_json(capsys):
    code, out, _ = run(capsys, "eval", "m", "--kappa", "0", "--mu", "0.5", "--x", "2")
    rec = json.loads(out)
    assert code == 0 and set(rec) == KEYS
    assert rec["value"] == pytest.approx(2.3504023873, rel=1e-10)
    assert rec["route"] == "series"


def test_eval_rejects_b_pole(capsys):
    code, out, err = run(capsys, "eval", "m", "--kappa", "0", "--mu", "-0.5", "--x", "2")
    assert code == 2 and out == "" and "2mu != -1" in err


def test_usage_errors(capsys):
    assert run(capsys, "eval", "g1", "--a", "1", "--x", "1")[0] == 2
    assert run(capsys, "eval", "m", "--kappa", "0", "--mu", "1", "--x", "1", "--route", "fast")[0] == 2
    assert run(capsys, "eval", "m", "--kappa", "0", "--mu", "1", "--x", "1:0:1")[0] == 2
    assert run(capsys, "eval", "nothing", "--x", "1")[0] == 2
    assert run(capsys, "eval", "mi-upper", "--kappa", "0", "--mu", "0.5", "--x", "1")[0] == 2


def test_range_and_text(capsys):
    code, out, _ = run(capsys, "eval", "m", "--kappa", "0.5", "--mu", "0.5", "--x=-1:1:0.5", "--format", "text")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 5
    assert "x=-1)" in lines[0] and "reflect" in lines[0]


def test_parse_xs():
    assert cli.parse_xs("0.5:2:0.5") == [0.5, 1.0, 1.5, 2.0]
    assert cli.parse_xs("1,2.5") == [1.0, 2.5]
    with pytest.raises(cli.UsageError):
        cli.parse_xs("1:2")


def test_csv_columns(capsys):
    code, out, _ = run(capsys, "eval", "dmdk", "--kappa", "-0.5", "--mu", "0", "--x", "1,2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and tuple(rows[0]) == cli.CSV_COLUMNS and len(rows) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["g1", "--a", "1", "--b", "2"],
        ["h1", "--a", "1", "--b", "2", "--route", "closed"],
        ["i1", "--kappa", "0", "--mu", "0.5"],
        ["i3", "--kappa", "0", "--mu", "0.5", "--route", "quad"],
        ["j4", "--kappa", "0", "--mu", "0.5"],
        ["h1inf", "--kappa", "0", "--mu", "0.5"],
        ["h2inf", "--kappa", "0", "--mu", "0.5", "--route", "quad"],
        ["gammainc-dnu", "--nu", "1"],
        ["Gammainc-dnu", "--nu", "1"],
        ["mi", "--kappa", "2", "--mu", "0.5", "--route", "reduced"],
        ["mi-upper", "--kappa", "2", "--mu", "0.5"],
        ["dmdmu", "--kappa", "0", "--mu", "1.5", "--route", "all"],
    ],
    ids=lambda a: a[0],
)
def test_every_target(capsys, argv):
    code, out, _ = run(capsys, "eval", *argv, "--x", "1")
    assert code == 0 and set(json.loads(out)) == KEYS


def test_json_digits(capsys):
    _, out, _ = run(capsys, "eval", "gammainc-dnu", "--nu", "1", "--x", "1")
    assert json.loads(out)["value"] == float(f"{-0.7965995992970532:.17g}")
    _, out, _ = run(capsys, "eval", "gammainc-dnu", "--nu", "1", "--x", "1", "--format", "text")
    assert "-0.7965995993 " in out


def test_table_t5(capsys):
    code, out, _ = run(capsys, "table", "T5", "--x", "1", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and rows
    assert all(r["status"] == "pass" and r["rel_diff"] < 1e-10 for r in rows)


def test_table_byte_reproducible(capsys):
    a = run(capsys, "table", "T3B", "--x", "0.5:1:0.5", "--format", "csv")[1]
    b = run(capsys, "table", "T3B", "--x", "0.5:1:0.5", "--format", "csv")[1]
    assert a == b and "skipped" in a


def test_table_tolerance_override_fails(capsys):
    assert run(capsys, "table", "T1", "--x", "1", "--tol", "0")[0] == 1


def test_verify_suite(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "integral_relations", "--format", "json", "--out", str(out_file))
    data = json.loads(out_file.read_text())
    assert code == 0 and out == ""
    assert data["summary"]["passed"] == data["summary"]["total"] > 0


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "incgamma", "--tol", "0")
    assert code == 1 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "whittaker", "eval", "m", "--kappa", "0", "--mu", "0.5",
                           "--x", "2", "--format", "text"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "2.350402387" in proc.stdout
