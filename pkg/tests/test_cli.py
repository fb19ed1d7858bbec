import json

import pytest

from sra.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_counts_doubled_a(capsys):
    code, out, _ = run(capsys, "counts", "--builtin", "doubled-A", "--rank", "3")
    assert code == 0
    assert "T = 1" in out and "S = 2" in out


def test_counts_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "--json", "counts", "--builtin", "cyclic", "--n", "4")
    code2, out2, _ = run(capsys, "--json", "counts", "--builtin", "cyclic", "--n", "4")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["traces"] == 3 and payload["supertraces"] == 3


def test_glc_cyclic2(capsys):
    code, out, _ = run(capsys, "glc", "--builtin", "cyclic", "--n", "2",
                       "--kappa", "-1")
    assert code == 0
    assert "-eta0*P0" in out


def test_group_info_and_save(tmp_path, capsys):
    path = tmp_path / "b2.json"
    code, out, _ = run(capsys, "group", "--builtin", "doubled-B", "--rank", "2",
                       "--save", str(path))
    assert code == 0
    assert "Klein operator: present" in out
    saved = json.loads(path.read_text())
    assert saved["N"] == 2
    # reload through the eval command
    code, out, _ = run(capsys, "eval", "--group", str(path), "--kappa", "-1",
                       "--expr", "a1*a2")
    assert code == 0


def test_eval_parse_error_exit_1(tmp_path, capsys):
    path = tmp_path / "z2.json"
    path.write_text(json.dumps({
        "name": "Z2", "N": 1, "cyclotomic_order": 2,
        "generators": [[["-1", "0"], ["0", "-1"]]],
    }))
    code, out, err = run(capsys, "eval", "--group", str(path), "--kappa", "-1",
                         "--expr", "a3")
    assert code == 1
    assert "out of range" in err and "position" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["glc", "--kappa", "7", "--builtin", "cyclic", "--n", "2"])
    assert e.value.code == 2


def test_missing_group_selection(capsys):
    code, _, err = run(capsys, "counts")
    assert code == 1
    assert "exactly one" in err


def test_eval_with_eta_assignment(tmp_path, capsys):
    path = tmp_path / "z2.json"
    path.write_text(json.dumps({
        "name": "Z2", "N": 1, "cyclotomic_order": 2,
        "generators": [[["-1", "0"], ["0", "-1"]]],
        "eta": {"R0": "1/2"},
    }))
    code, out, _ = run(capsys, "eval", "--group", str(path), "--kappa", "-1",
                       "--expr", "a1*a2")
    assert code == 0
    assert "at eta = (1/2)" in out
    # str(a1 a2) = (1 - eta^2)/2 -> 3/8 at eta = 1/2
    assert "3/8" in out


def test_gram_cli(capsys):
    code, out, _ = run(capsys, "gram", "--builtin", "cyclic", "--n", "2",
                       "--kappa", "-1", "--degree", "0")
    assert code == 0
    assert "det = 1 - eta0^2" in out
    assert "rational roots: -1, 1" in out


def test_oracle_check_cli(capsys):
    code, out, _ = run(capsys, "oracle-check", "--builtin", "cyclic", "--n", "3",
                       "--kappa", "both", "--max-degree", "2")
    assert code == 0
    assert "0 mismatches" in out


def test_selftest_cli(capsys):
    code, out, _ = run(capsys, "--json", "selftest", "--groups", "cyclic:2",
                       "--samples", "3", "--seed", "1")
    assert code == 0
    payload = json.loads(out)
    entry = payload["groups"]["cyclic:2"]
    assert entry["group_invariants"] is True
    assert entry["kappa+1"]["confluence"] is True


def test_product_builtin_cli(capsys):
    code, out, _ = run(capsys, "counts", "--builtin", "product",
                       "--factors", "cyclic:2,cyclic:3")
    assert code == 0
    assert "T = 2" in out and "S = 3" in out


def test_cap_exceeded_exit_1(tmp_path, capsys):
    path = tmp_path / "free.json"
    path.write_text(json.dumps({
        "name": "shear", "N": 1,
        "generators": [[["1", "1"], ["0", "1"]]],
        "allow_non_reflections": True,
    }))
    code, _, err = run(capsys, "counts", "--group", str(path), "--cap", "50")
    assert code == 1
    assert "cap" in err
