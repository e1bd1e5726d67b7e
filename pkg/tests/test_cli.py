import csv
import io
import json

import pytest

from stampbasis.cli import run


def test_n_json_stable():
    code, out, err = run(["n", "--h", "2", "--k", "2", "--json"])
    assert code == 0 and not err
    assert json.loads(out) == {"value": 4, "witness": [1, 2], "params": {"h": 2, "k": 2}}
    assert run(["n", "--h", "2", "--k", "2", "--json"])[1] == out


def test_hofn_and_bign():
    code, out, _ = run(["hofn", "--n", "10", "--k", "2", "--json"])
    assert code == 0 and json.loads(out)["value"] == 4
    code, out, _ = run(["bign", "--h", "2", "--k", "2", "--json"])
    assert code == 0 and json.loads(out)["value"] == 5


def test_ratios_csv_header():
    code, out, _ = run(["ratios", "--k", "2", "--range", "1..3", "--csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0][:3] == ["param", "n", "s"] and len(rows) == 4


def test_build_then_verify(tmp_path):
    code, out, _ = run(["build", "sec4", "--h", "10", "--k", "2", "--primes", "5,7,11", "--json"])
    assert code == 0
    f = tmp_path / "b.json"
    f.write_text(out)
    code, out, err = run(["verify", "--file", str(f), "--json"])
    assert code == 0, err
    data = json.loads(out)
    assert data["ok"] and data["measured"]["order"] == 10
    code, out, _ = run(["essential", "--file", str(f), "--json"])
    assert code == 0


def test_build_sec3_and_thm44():
    assert run(["build", "sec3", "--h", "3", "--k", "30", "--json"])[0] == 0
    code, out, _ = run(["build", "thm44", "--p", "1009", "--k", "2", "--json"])
    assert code == 0 and json.loads(out)["claimed"]["order"] == 62


def test_exit_codes(tmp_path):
    wrong = tmp_path / "w.json"
    wrong.write_text(json.dumps({"kind": "cyclic", "params": {"modulus": 7},
                                 "elements": [1, 2], "claimed": {"order": 1}}))
    code, _, err = run(["verify", "--file", str(wrong)])
    assert code == 4 and err.startswith("stampbasis: order-mismatch:")
    broken = tmp_path / "b.json"
    broken.write_text("{oops")
    code, _, err = run(["verify", "--file", str(broken)])
    assert code == 6 and err.count("\n") == 1
    assert run(["n", "--h", "2"])[0] == 2
    assert run(["n", "--h", "8", "--k", "8", "--budget", "1000"])[0] == 3
    assert run(["build", "sec3", "--h", "3", "--k", "2"])[0] == 5


def test_represent_and_selftest():
    code, out, _ = run(["represent", "--h1", "200000", "--k", "2", "--json"])
    assert code == 0
    code, out, _ = run(["selftest", "--json"])
    assert code == 0
