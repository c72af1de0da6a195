import csv
import io
import json
import subprocess
import sys

import pytest

from flagrep import cli
from flagrep.cli import parse_weight, run_cli
from flagrep.rep_theory import Decomposition, decompose, tensor_character
from flagrep.root_system import build_root_system

from golden_cases import CASES, GOLDEN_DIR


def run(cmd):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(cmd.split() if isinstance(cmd, str) else cmd, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, _ = run(CASES[name])
    assert code == 0
    assert out == (GOLDEN_DIR / name).read_text(encoding="utf-8")


def test_every_command_has_a_golden_file():
    covered = {cmd.split()[0] for cmd in CASES.values()}
    assert covered == set(cli.COMMANDS)
    formats = {"table"} | {cmd.split("--format ")[1] for cmd in CASES.values() if "--format" in cmd}
    assert formats == {"table", "json", "csv"}


def test_kostant_json_example():
    code, out, _ = run("verify-kostant --type A --rank 2 --format json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["type"], doc["rank"], doc["command"]) == ("A", 2, "verify-kostant")
    assert doc["result"]["conjecture_holds"] is True
    assert len(doc["result"]["support_tensor"]) == 5


def test_d4_table_sums_to_648():
    code, out, _ = run("decompose-tensor --type D --rank 4 --lambda 1,1,1,1 --mu 1,1,1,1")
    rows = [line.split() for line in out.splitlines()[2:] if not line.startswith("#")]
    assert code == 0
    assert sum(int(r[1]) for r in rows) == 648


def test_bwb_trivial_example():
    code, out, _ = run("bwb --type A --rank 1 --weight -2")
    assert code == 0
    assert "H^1 = V(0)^* (trivial)" in out


@pytest.mark.parametrize("t,n,lam,mu", [("A", 2, "1,1", "1,1"), ("B", 2, "2,1", "0,1"), ("G", 2, "1,0", "1,1")])
def test_json_round_trip(t, n, lam, mu):
    code, out, _ = run(f"decompose-tensor --type {t} --rank {n} --lambda {lam} --mu {mu} --format json")
    assert code == 0
    got = Decomposition.from_records(json.loads(out)["result"]["components"])
    rs = build_root_system(t, n)
    expected = decompose(rs, tensor_character(rs, parse_weight(lam, n), parse_weight(mu, n)))
    assert got == expected
    # dimensions travel as decimal strings
    assert all(isinstance(c["dimension"], str) for c in json.loads(out)["result"]["components"])


def test_csv_rows_parse():
    code, out, _ = run("decompose-tensor --type A --rank 2 --lambda 1,1 --mu 1,1 --format csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    parts = {tuple(int(x) for x in r["weight"].split()): int(r["multiplicity"]) for r in rows}
    assert parts == {(0, 0): 1, (0, 3): 1, (1, 1): 2, (2, 2): 1, (3, 0): 1}


def test_deterministic_output():
    cmd = "report-hh --type B --rank 3 --format json"
    assert run(cmd) == run(cmd)


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(["wahl", "--type", "A", "--rank", "3", "--format", "json", "-o", str(target)])
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8") == (GOLDEN_DIR / "wahl_a3.json").read_text(encoding="utf-8")


def test_negative_weights_parse():
    for argv in (["bwb", "--type", "A", "--rank", "2", "--weight", "-3,2"],
                 ["bwb", "--type", "A", "--rank", "2", "--weight=-3,2"]):
        code, out, _ = run(argv)
        assert code == 0 and "H^1 = V(1,0)^*" in out


@pytest.mark.parametrize("cmd", [
    "",
    "frobnicate --type A --rank 2",
    "bwb --type A --rank 2",
    "bwb --type A --rank 2 --weight 1,x",
    "bwb --type A --rank 2 --weight 1,2,3",
    "euler-char --type A --rank 2 --format xml",
    "dominant-below --type A --rank 2 --weight -1,0",
    "decompose-tensor --type A --rank 2 --lambda 1,-1 --mu 0,0",
    "euler-char --type A --rank 2 --degree 9",
])
def test_usage_errors_exit_2(cmd, capsys):
    code, _, _ = run(cmd)
    assert code == 2


@pytest.mark.parametrize("t,n", [("D", 3), ("E", 9), ("Q", 2), ("A", 0), ("G", 3)])
def test_invalid_type_exit_2(t, n):
    code, out, err = run(f"wahl --type {t} --rank {n}")
    assert code == 2 and out == ""
    assert err.startswith("flagrep: error:")


def test_feasibility_exit_3():
    code, out, err = run("verify-kostant --type E --rank 7")
    assert code == 3 and out == ""
    assert "--force" in err


def test_overflow_exit_4(monkeypatch):
    def boom(*args, **kwargs):
        raise OverflowError("coefficient exceeds int64")

    monkeypatch.setattr(cli, "tensor_character", boom)
    code, out, err = run("decompose-tensor --type A --rank 2 --lambda 1,1 --mu 1,1")
    assert code == 4 and out == ""
    assert "overflow" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "flagrep", "bwb", "--type", "A", "--rank", "1", "--weight", "-2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN_DIR / "bwb_a1.txt").read_text(encoding="utf-8")


def test_parse_weight():
    assert parse_weight("1, -2,0", 3) == (1, -2, 0)
    with pytest.raises(cli.UsageError):
        parse_weight("1,2", 3)
