import json
import shutil
import subprocess

import pytest

from abcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_ab(capsys):
    code, out, _ = run(capsys, "construct", "--p", "2", "--m", "5", "--func", "ab:gold", "--i", "1", "--r", "5")
    assert code == 0
    data = json.loads(out)
    assert data["params"] == [31, 10, 12] and data["match"]
    assert data["generator"][0] == "2 31 10"


def test_construct_planar_reports_table_mismatch(capsys):
    code, out, _ = run(capsys, "construct", "--p", "3", "--m", "3", "--func", "planar:dy", "--u", "1", "--r", "2")
    data = json.loads(out)
    assert data["params"] == [26, 5, 15]
    # the printed closed form disagrees for 1 <= r < m; the moment solution does not
    assert code == 1 and not data["match"]
    assert data["moment_solution"]["match"]


def test_usage_error(capsys):
    code, _, err = run(capsys, "construct", "--p", "2", "--m", "4", "--func", "ab:gold", "--i", "1", "--r", "4")
    assert code == 2
    assert err.startswith("INVALID_PARAMETERS:")


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--m", "3"])
    assert exc.value.code == 2


def test_cap_exit(capsys):
    code, _, err = run(capsys, "verify-function", "--p", "2", "--m", "11", "--func", "ab:gold")
    assert code == 3 and err.startswith("FIELD_TOO_LARGE:")


def test_nonprime(capsys):
    code, _, err = run(capsys, "construct", "--p", "4", "--m", "3", "--func", "ab:gold", "--r", "1")
    assert code == 2 and err.startswith("NON_PRIME:")


def test_formats_and_output(capsys, tmp_path):
    args = ["construct", "--p", "2", "--m", "3", "--func", "ab:kasami", "--r", "1"]
    code, out, _ = run(capsys, *args, "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "w,count"
    code, out, _ = run(capsys, *args, "--format", "text")
    assert "match: yes" in out
    target = tmp_path / "wd.json"
    assert main(args + ["--output", str(target)]) == 0
    assert json.loads(target.read_text())["params"] == [7, 4, 2]


def test_deterministic(capsys):
    args = ["analyze", "--p", "3", "--m", "3", "--func", "planar:cm", "--r", "3"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


def test_analyze_examples(capsys):
    code, out, _ = run(capsys, "analyze", "--p", "2", "--m", "5", "--func", "ab:gold", "--r", "5")
    chain = json.loads(out)["chain"]
    assert code == 0
    assert chain["dual"]["params"] == [31, 21, 5]
    assert chain["ext_dual_dual"]["params"] == [32, 11, 12]
    code, out, _ = run(capsys, "analyze", "--p", "3", "--m", "3", "--func", "planar:do", "--r", "3")
    chain = json.loads(out)["chain"]
    assert chain["dual"]["params"] == [26, 20, 4]
    assert chain["ext_dual_dual"]["params"] == [27, 7, 15]
    code, out, _ = run(capsys, "analyze", "--p", "2", "--m", "3", "--func", "ab:gold", "--r", "0")
    assert json.loads(out)["notes"]


def test_explicit_subgroup(capsys):
    base = ["construct", "--p", "2", "--m", "5", "--func", "ab:welch"]
    code, out, _ = run(capsys, *base, "--subgroup", "3,10", "--r", "2")
    assert code == 0 and json.loads(out)["subgroup"] == [3, 10]
    code, _, err = run(capsys, *base, "--subgroup", "3,3")
    assert code == 2 and err.startswith("DEPENDENT_BASIS:")
    code, out, _ = run(capsys, *base, "--subgroup", "random:4", "--r", "3")
    assert code == 0


def test_verify_function(capsys):
    code, out, _ = run(capsys, "verify-function", "--p", "3", "--m", "3", "--func", "planar:cm", "--k", "1")
    assert code == 0 and json.loads(out)["classification"] == "PLANAR"


def test_design(capsys):
    code, out, _ = run(capsys, "design", "--p", "2", "--m", "5", "--func", "ab:gold", "--r", "5")
    data = json.loads(out)
    assert code == 0 and data["assmus_mattson"]
    assert [c["lambda"] for c in data["classes"]] == ["22", "119", "114"]
    code, _, err = run(capsys, "design", "--p", "2", "--m", "5", "--func", "ab:gold", "--r", "5", "--weight", "14")
    assert code == 2 and err.startswith("WEIGHT_NOT_REALIZED:")


def test_sharing(capsys):
    code, out, _ = run(capsys, "sharing", "--p", "3", "--m", "3", "--func", "planar:do", "--r", "3", "--enumerate")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["minimal_access_sets"] == "243"
    assert data["enumeration"]["confirmed"]
    code, _, err = run(capsys, "sharing", "--p", "2", "--m", "3", "--func", "ab:gold", "--r", "3")
    assert code == 2 and err.startswith("DUAL_NOT_MINIMAL:")


def test_verify_all_empty(capsys):
    code, out, _ = run(capsys, "verify-all", "--ranges", "")
    assert code == 0 and json.loads(out)["total"] == 0


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "verify-all", "--ranges", "2:5")
    data = json.loads(out)
    assert code == 0 and data["failed"] == 0 and data["total"] > 50
    assert all({"id", "anchor", "expected", "computed", "pass"} <= set(c) for c in data["checks"])


def test_self_test_reports_exactly_one(capsys):
    code, out, _ = run(capsys, "verify-all", "--ranges", "2:3;3:3", "--self-test")
    data = json.loads(out)
    assert code == 0
    assert data["failed"] == 1
    assert data["self_test"]["detected"]


@pytest.mark.skipif(shutil.which("abcodes") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["abcodes", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip()
