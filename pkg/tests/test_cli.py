import json
import subprocess
import sys

import pytest

from dualknot import __version__
from dualknot.cfk import builtin, serialize
from dualknot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def trefoil_file(tmp_path):
    p = tmp_path / "trefoil.cfk"
    p.write_text(serialize(builtin("trefoil-rh")))
    return p


def test_validate_ok(capsys, trefoil_file):
    code, out, _ = run(capsys, "validate", str(trefoil_file))
    assert code == 0 and out.strip() == "valid"


def test_validate_broken_flip(capsys, trefoil_file):
    trefoil_file.write_text(trefoil_file.read_text().replace("flip a c", ""))
    code, _, err = run(capsys, "validate", str(trefoil_file))
    assert code == 2 and "flip" in err


def test_validate_empty_file(capsys, tmp_path):
    p = tmp_path / "empty.cfk"
    p.write_text("")
    assert run(capsys, "validate", str(p))[0] == 3


def test_validate_missing_file(capsys, tmp_path):
    assert run(capsys, "validate", str(tmp_path / "nope.cfk"))[0] == 2


def test_hfk_table(capsys):
    code, out, _ = run(capsys, "hfk", "--knot", "trefoil-rh", "--p", "1", "--q", "2")
    assert code == 0
    rows = {int(l.split()[0]): int(l.split()[1]) for l in out.splitlines() if l.strip() and l.split()[0].lstrip("-").isdigit()}
    assert rows[-2] == rows[2] == 1 and rows[-3] == rows[3] == 0
    assert f"version {__version__}" in out


def test_hfk_json_schema(capsys):
    code, out, _ = run(capsys, "hfk", "--knot", "unknot", "--p", "3", "--q", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {"knot", "p", "q", "classes", "window_predicted", "window_computed", "stable", "version", "bound"} <= set(data)
    assert [c["sbar"] for c in data["classes"] if c["rank"]] == [0, 1, 2]
    assert all(c["rank"] == 1 for c in data["classes"] if 0 <= c["sbar"] <= 2)
    assert [c["sbar"] for c in data["classes"]] == sorted(c["sbar"] for c in data["classes"])


def test_hfk_json_is_deterministic(tmp_path):
    outs = []
    for n in range(2):
        path = tmp_path / f"o{n}.json"
        main(["hfk", "--knot", "figure8", "--p", "3", "--q", "2", "--format", "json", "--output", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_hfk_csv_and_cfk_source(capsys, trefoil_file):
    code, out, _ = run(capsys, "hfk", "--cfk", str(trefoil_file), "--p", "1", "--q", "2",
                       "--format", "csv", "--domain", "line_i:0", "--classes=-1..1")
    assert code == 0
    assert out.splitlines() == ["sbar,rank", "-1,3", "0,3", "1,3"]


@pytest.mark.parametrize("argv,code", [
    (["hfk", "--knot", "builtin:none"], 2),
    (["hfk", "--knot", "unknot", "--cfk", "x.cfk"], 2),
    (["hfk"], 2),
    (["hfk", "--knot", "unknot", "--p", "2", "--q", "4"], 2),
    (["hfk", "--knot", "unknot", "--domain", "halfplane_i:0"], 2),
    (["hfk", "--knot", "unknot", "--domain", "ball:1"], 2),
    (["hfk", "--knot", "unknot", "--classes", "a..b"], 2),
])
def test_usage_errors(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_cfk_syntax_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.cfk"
    p.write_text("gen a A=zero\n")
    assert run(capsys, "hfk", "--cfk", str(p))[0] == 3


def test_builtin_prefix(capsys):
    assert run(capsys, "window", "--knot", "builtin:trefoil-rh", "--p", "1", "--q", "2")[0] == 0


def test_hf_total(capsys):
    code, out, _ = run(capsys, "hf", "--knot", "unknot", "--p", "5", "--q", "1", "--format", "json")
    assert code == 0 and json.loads(out)["total"] == 5


def test_hf_reports_instability(capsys):
    assert run(capsys, "hf", "--knot", "trefoil-rh", "--p", "1", "--q", "2", "--bound", "0")[0] == 4


def test_crosscheck(capsys):
    assert run(capsys, "crosscheck", "--knot", "trefoil-rh", "--n", "7")[0] == 0


def test_crosscheck_threshold(capsys):
    code, _, err = run(capsys, "crosscheck", "--knot", "trefoil-rh", "--n", "1")
    assert code == 5 and "threshold" in err


def test_crosscheck_mismatch_exit(capsys, monkeypatch):
    import dualknot.cli as cli

    monkeypatch.setattr(cli, "cone_rank", lambda spec: 1 if spec.sbar in (0, 8) else 0)
    code, _, err = run(capsys, "crosscheck", "--knot", "unknot", "--n", "7", "--classes", "0,8,9")
    assert code == 4 and "mismatch at class 8" in err


def test_window_command(capsys):
    code, out, _ = run(capsys, "window", "--knot", "figure8", "--p", "5", "--q", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["window_computed"] == data["window_predicted"] == [-3, 7]


def test_zeta_command(capsys):
    code, out, _ = run(capsys, "zeta", "--knot", "unknot", "--n", "5", "--format", "json")
    ranks = [r["rank"] for r in json.loads(out)["profile"]]
    assert code == 0 and ranks == list(range(1, 8))
    assert run(capsys, "zeta", "--knot", "unknot", "--n", "5", "--s", "3")[0] == 5


def test_s3check_command(capsys):
    code, out, _ = run(capsys, "s3check", "--knot", "trefoil-rh", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "not S3"
    assert [w["computed"] for w in data["windows"]] == [[-1, 1], [-2, 2], [-3, 3]]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "dualknot", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and __version__ in res.stdout
