import json

import pytest

from oracles import golden_table
from uniport.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_singleton(capsys):
    code, out = call(capsys, "classify", "--g", "3,2,1,1", "--delta", "{1}")
    data = json.loads(out)
    assert code == 0
    assert data["schema"] == 1
    assert (data["compatible"], data["code"], data["X"], data["Y"]) == (True, "M", [1], [2, 3, 4])


def test_check_compat_failure(capsys):
    code, out = call(capsys, "check-compat", "--g", "1,0,0,0", "--delta", "{1}")
    data = json.loads(out)
    assert code == 1
    assert data["compatible"] is False and "witness" in data


def test_table_csv_matches_fixture(capsys):
    code, out = call(capsys, "table", "--m", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 29
    _, rows = golden_table()
    for line, (_, cells) in zip(lines[1:], rows):
        assert line.rsplit('",', 1)[1].split(",") == cells


def test_min_gamma_formats(capsys):
    code, out = call(capsys, "min-gamma", "--g", "1,1,0", "--delta", "{1,2};{1,3};{2,3}", "--format", "csv")
    assert code == 0 and out.split() == ["1,1,0", "1,0,1", "0,1,1"]
    code, out = call(capsys, "min-gamma", "--g", "1,1,0", "--delta", "{1,2};{1,3};{2,3}")
    assert json.loads(out)["minGamma"] == [[1, 1, 0], [1, 0, 1], [0, 1, 1]]


def test_hierarchy_and_enumerate(capsys):
    code, out = call(capsys, "hierarchy", "--g", "1,1,1,1", "--delta", "{1,2}")
    assert code == 0 and json.loads(out)["type"] == "LambdaStar"
    code, out = call(capsys, "enumerate-delta", "--m", "4")
    assert json.loads(out)["count"] == 28


def test_usage_errors(capsys):
    assert run(["classify", "--g", "1,2", "--delta", "{1}"]) == 2
    assert run(["classify", "--g", "2,1", "--delta", "{7}"]) == 2
    assert run(["represent", "--g", "2,1", "--delta", "{1};{2}", "--prime", "15"]) == 2
    assert run(["table", "--m", "9"]) == 2
    assert run(["classify", "--g", "2,1,0", "--m", "4", "--delta", "{1}"]) == 2
    with pytest.raises(SystemExit) as info:
        run(["no-such-command"])
    assert info.value.code == 2


def test_represent_outputs_transcript(capsys):
    code, out = call(capsys, "represent", "--g", "2,1,0,0", "--m", "3", "--delta", "{1};{2,3}", "--seed", "7")
    data = json.loads(out)
    assert code == 0 and data["portVerified"] and data["representation"]["p"] == 11
    assert len(data["transcript"]) == 8
    code, out = call(capsys, "represent", "--g", "2,1,0,0", "--delta", "{1};{2,3};{2,4};{3,4}", "--seed", "7")
    data = json.loads(out)
    assert code == 0 and data["portVerified"] and data["representation"]["p"] == 17
    assert len(data["transcript"]) == 16
    code, out = call(capsys, "represent", "--g", "2,1,0,0", "--delta", "{1};{2};{3,4}", "--explicit")
    assert code == 0 and json.loads(out)["portVerified"]


def test_represent_not_found_exit(capsys):
    code, out = call(capsys, "represent", "--g", "3,2,1,0", "--delta", "{1};{2}", "--tries", "20")
    assert code == 1 and json.loads(out)["found"] is False


def test_share_and_reconstruct(tmp_path, capsys):
    inst, bundle = tmp_path / "inst.json", tmp_path / "b.json"
    code, out = call(
        capsys, "share", "--g", "1,1,1,1", "--delta", "{1,2}", "--blocks", "2,2,2,2", "--secret", "7",
        "--seed", "42", "--instance-out", str(inst), "--bundle-out", str(bundle),
    )
    assert code == 0 and len(json.loads(out)["shares"]) == 8
    code, out = call(capsys, "reconstruct", "--instance", str(inst), "--bundle", str(bundle), "--set", "1.1,2.2")
    assert code == 0 and json.loads(out)["secret"] == 7
    code, out = call(capsys, "reconstruct", "--instance", str(inst), "--bundle", str(bundle), "--set", "1.1,1.2,3.1")
    assert code == 1 and json.loads(out)["recovered"] is False


def test_output_is_deterministic(capsys):
    argv = ["share", "--g", "2,0,0", "--delta", "{1};{2};{3}", "--blocks", "3,3,3", "--secret", "4", "--seed", "9"]
    assert call(capsys, *argv) == call(capsys, *argv)


def test_conjecture_scan_archive(tmp_path, capsys):
    path = tmp_path / "scan.json"
    code, out = call(capsys, "conjecture-scan", "--m", "3", "--archive", str(path))
    data = json.loads(out)
    assert code == 0 and data["mismatchCount"] == len(data["mismatches"])
    assert path.exists() == bool(data["mismatches"])
    assert run(["conjecture-scan", "--m", "3", "--amplify", "cube"]) == 2
