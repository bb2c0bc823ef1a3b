import csv
import io
import json
import subprocess
import sys

import pytest

from qmex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "R.rep1", "--order", "3")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["1", "1", "-1", "2"]
    _, out, _ = run(capsys, "expand", "P.bar", "--order", "3")
    assert json.loads(out)["coefficients"] == ["1", "2", "4", "8"]
    _, out, _ = run(capsys, "expand", "G.tail.5", "--order", "5")
    assert json.loads(out)["coefficients"] == ["0"] * 6


def test_expand_unknown(capsys):
    code, _, err = run(capsys, "expand", "nope")
    assert code == 2 and "unknown" in err


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "--n", "3")
    assert json.loads(out)["count"] == 8
    _, out, _ = run(capsys, "enumerate", "--n", "0")
    rows = json.loads(out)["overpartitions"]
    assert rows == [{"overpartition": "", "weight": 0}]
    _, out, _ = run(capsys, "enumerate", "--n", "3", "--stat", "omex")
    row = next(r for r in json.loads(out)["overpartitions"] if r["overpartition"] == "2+1")
    assert row["value"] == 3 and row["restricted"] is True


def test_enumerate_parity_conflict(capsys):
    code, _, _ = run(capsys, "enumerate", "--n", "3", "--stat", "tilde_omoex")
    assert code == 2
    code, _, _ = run(capsys, "enumerate", "--n", "3", "--stat", "tilde_omoex", "--odd")
    assert code == 0


def test_table(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "3")
    row = json.loads(out)["rows"][3]
    assert (row["mbar_enum"], row["mtilde_enum"], row["mbar_o_enum"], row["mtilde_o_enum"]) == (
        "4", "3", "3", "1")
    assert all(v for k, v in row.items() if k.endswith("_agree"))
    _, out, _ = run(capsys, "table", "--max-n", "5", "--stats", "sigma_omex")
    assert json.loads(out)["rows"][3]["sigma_omex_enum"] == "7"


def test_table_n_zero(capsys):
    _, out, _ = run(capsys, "table", "--max-n", "0")
    row = json.loads(out)["rows"][0]
    assert row["mbar_enum"] == row["mbar_o_enum"] == "1"
    # tilde classes start at q^1
    assert row["mtilde_enum"] == row["mtilde_o_enum"] == "0"
    assert row["sigma_omex_enum"] == row["sigma_omoex_index_enum"] == "1"


def test_table_bound(capsys, monkeypatch):
    code, _, _ = run(capsys, "table", "--max-n", "30")
    assert code == 2
    monkeypatch.setenv("QMEX_MAX_ENUM", "3")
    code, _, _ = run(capsys, "table", "--max-n", "4")
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "thm3", "--order", "100")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, _, _ = run(capsys, "verify", "nosuchcase")
    assert code == 2


def test_csv_matches_json(capsys):
    _, j, _ = run(capsys, "table", "--max-n", "6", "--format", "json")
    _, c, _ = run(capsys, "table", "--max-n", "6", "--format", "csv")
    jrows = json.loads(j)["rows"]
    crows = list(csv.DictReader(io.StringIO(c)))
    assert len(jrows) == len(crows)
    for jr, cr in zip(jrows, crows):
        for k, v in jr.items():
            assert cr[k] == (str(v).lower() if isinstance(v, bool) else str(v))
    _, j, _ = run(capsys, "expand", "thm6.rhs", "--order", "20")
    _, c, _ = run(capsys, "expand", "thm6.rhs", "--order", "20", "--format", "csv")
    assert [r["coefficient"] for r in csv.DictReader(io.StringIO(c))] == json.loads(j)["coefficients"]


@pytest.mark.parametrize("argv", [
    ["expand", "thm5.rhs", "--order", "60"],
    ["enumerate", "--n", "6", "--odd", "--stat", "omoex", "--format", "csv"],
    ["verify", "all", "--order", "20", "--enum-bound", "8", "--no-timing"],
])
def test_byte_deterministic_subprocess(argv):
    cmd = [sys.executable, "-m", "qmex", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
