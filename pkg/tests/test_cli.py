import json
import subprocess
import sys

import pytest

from formal_quintic.cli import RunConfig, UsageError, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "L", "-N", "2")
    assert code == 0
    assert json.loads(out)["coefficients"] == [["1", "1"], ["625", "1"], ["1171875", "1"]]


def test_series_table(capsys):
    code, out, _ = run(capsys, "series", "A2", "-N", "1", "--format", "table")
    assert code == 0 and "-3/25" in out


def test_series_r_entry(capsys):
    code, out, _ = run(capsys, "series", "R[0][1]", "-N", "3", "--kmax", "1")
    # R_1 = (3/20)(L - L^5) = -375 q + ...
    assert code == 0 and json.loads(out)["coefficients"][1] == ["-375", "1"]


def test_unknown_series(capsys):
    code, _, err = run(capsys, "series", "nope")
    assert code == 2 and "unknown series" in err


@pytest.mark.parametrize("suite", ["drule", "c-relations", "lemma-rr"])
def test_verify_passes(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "-N", "10", "--kmax", "2")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "bogus")[0] == 2


def test_recognition_suite_needs_precision(capsys):
    code, _, err = run(capsys, "verify", "rpoly", "-N", "20")
    assert code == 2 and "4*kmax + 10" in err


def test_hae_genus_two_is_deterministic(capsys):
    first = run(capsys, "hae", "--genus", "2")
    second = run(capsys, "hae", "--genus", "2")
    assert first[0] == 0 and first[1] == second[1]
    doc = json.loads(first[1])
    assert doc["constant"] == "unknown" and doc["window"] == [-15, 10]
    assert doc["provenance"]["genus1"] == "default"


def test_hae_genus_one_is_usage_error(capsys):
    assert run(capsys, "hae", "--genus", "1")[0] == 2


def test_hae_missing_constants(capsys):
    code, out, _ = run(capsys, "hae", "--genus", "3")
    assert code == 2 and json.loads(out) == {"error": "MissingConstants", "genera": [2]}


def test_hae_with_constants_file(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"2": {"0": "1/240"}, "3": {"-5": "1"}}))
    code, out, _ = run(capsys, "hae", "--genus", "3", "--constants", str(path))
    doc = json.loads(out)
    assert code == 0 and doc["constant_resolved"] and doc["constants_file"]


def test_constants_outside_window(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"2": {"11": "1"}}))
    code, _, err = run(capsys, "hae", "--genus", "3", "--constants", str(path))
    assert code == 2 and "outside" in err


def test_config_validation():
    with pytest.raises(UsageError):
        RunConfig(precision=0).validate()
    with pytest.raises(UsageError):
        RunConfig(precision=10, kmax=4).validate("lemma-rr")
    RunConfig(precision=26, kmax=4).validate("rpoly")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "formal_quintic", "series", "i0", "-N", "1"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["coefficients"][1] == ["120", "1"]
