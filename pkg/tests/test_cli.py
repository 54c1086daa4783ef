from __future__ import annotations

import io
import json

from tensorwalk.cli import run
from tensorwalk.walks import builtin_config


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_seq_json():
    code, out, _ = call("seq", "T3", "--terms", "10")
    assert code == 0
    assert json.loads(out) == ["1", "0", "1", "1", "4", "10", "35", "120", "455", "1792"]


def test_seq_by_oeis_tag_and_csv():
    code, out, _ = call("--format", "csv", "seq", "A001181", "--terms", "9")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,value" and lines[-1] == "8,58202"


def test_inverse_binomial_transform():
    code, out, _ = call("bt", "--power", "-1", "--values", "1,1,2,5,15,51")
    assert json.loads(out) == ["1", "0", "1", "1", "4", "10"]


def test_rec_commands():
    code, out, _ = call("rec", "unroll", "--name", "T3_rec", "--n", "5")
    assert json.loads(out) == ["1", "0", "1", "1", "4", "10"]
    code, out, _ = call("rec", "unroll", "--name", "uniform_rec", "--k", "2", "--initial", "1,2,6,22",
                        "--n", "6")
    assert json.loads(out)[-1] == "2074"
    code, out, _ = call("rec", "verify", "--name", "S3_rec", "--seq", "S3", "--terms", "20")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = call("rec", "verify", "--name", "S3_rec", "--values", "1,3,11,48,225")
    assert code == 1 and json.loads(out)["first_failure"] == 1
    code, out, _ = call("rec", "guess", "--seq", "T3", "--terms", "40")
    assert code == 0 and json.loads(out)["order"] == 3


def test_ode_commands():
    code, out, _ = call("ode", "mul", "--left", "Q", "--right", "L3", "--compare", "L6")
    assert code == 0 and json.loads(out)["equals"]
    code, out, _ = call("ode", "mul", "--left", "L3", "--right", "Q", "--compare", "L6")
    assert code == 1
    code, out, _ = call("ode", "apply", "--name", "L3", "--seq", "T3", "--order", "20")
    assert json.loads(out)["zero"]
    code, out, _ = call("ode", "to-rec", "--name", "L3")
    assert code == 0 and "coeffs" in json.loads(out)


def test_closedform_and_asym():
    code, out, _ = call("closedform", "verify", "--name", "baxter_gf", "--order", "20")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = call("closedform", "verify", "--name", "baxter_gf_printed", "--order", "20")
    assert code == 1
    code, out, _ = call("--format", "csv", "asym", "--samples", "100")
    assert code == 0 and out.startswith("n,r_n,richardson")


def test_oracles():
    assert json.loads(call("oracle", "partitions", "--n", "5", "--max-enhanced-crossing", "3")[1]) == \
        {"count": "51"}
    assert json.loads(call("oracle", "inversions", "--n", "5", "--forbid-wdec3")[1]) == {"count": "51"}
    assert json.loads(call("oracle", "tableaux", "--n", "4", "--tableau", "vacillating")[1]) == \
        {"count": "52"}
    assert json.loads(call("oracle", "sst", "--variant", "s2", "--n", "4")[1]) == {"count": "92"}
    assert json.loads(call("oracle", "sst", "--m", "1", "--content", "1,2")[1]) == {"count": "1"}
    code, _, err = call("oracle", "sst", "--n", "4")
    assert code == 2 and "error" in err


def test_branch_commands():
    code, out, _ = call("branch", "verify-axis", "--k", "2", "--n", "8")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = call("branch", "verify-restriction", "--k", "0", "--p", "1", "--n", "6")
    assert code == 0
    code, out, _ = call("--format", "csv", "branch", "table", "--max-deg", "1")
    assert out.splitlines()[0] == "r,s,p,q,multiplicity"


def test_walk_and_ct(tmp_path):
    code, out, _ = call("walk", "--builtin", "quadrant_sl3", "--k", "1", "--n", "4")
    assert json.loads(out) == ["1", "1", "3", "9", "33"]
    path = tmp_path / "cfg.json"
    path.write_text(builtin_config("halfline_sl2").to_json())
    code, out, _ = call("walk", "--config", str(path), "--n", "4")
    assert json.loads(out) == ["1", "0", "1", "0", "2"]
    code, out, _ = call("walk", "--n", "2", "--mode", "endpoints")
    assert json.loads(out)["endpoints"][0] == [0, 0, "1"]
    code, out, _ = call("ct", "--builtin", "quadrant", "--k", "2", "--n", "4")
    assert json.loads(out) == ["1", "2", "6", "22", "92"]


def test_check_subcommand():
    code, out, _ = call("check", "--only", "ct")
    assert code == 0 and json.loads(out)[0]["status"] == "pass"
    code, out, _ = call("check", "--only", "ct", "--corrupt", "ct_engines")
    assert code == 1


def test_usage_errors():
    assert call("frobnicate")[0] == 2
    assert call("seq", "nope")[0] == 2
    assert call("bt", "--power", "1")[0] == 2
    assert call("bt", "--values", "1,x")[0] == 2
    assert call("rec", "unroll", "--name", "L3")[0] == 2
    assert call("--format", "csv", "rec", "verify", "--seq", "T3")[0] == 2


def test_output_is_deterministic():
    assert call("branch", "table", "--max-deg", "3") == call("branch", "table", "--max-deg", "3")
