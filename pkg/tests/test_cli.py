import json

from cfkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", "[1,(0,1)^3]")
    assert code == 0 and out == "4\n"


def test_eval_fraction(capsys):
    code, out, _ = run(capsys, "eval", "[0;2,2]")
    assert code == 0 and out == "2/5\n"


def test_eval_infinity(capsys):
    code, out, _ = run(capsys, "eval", "[1,0]")
    assert code == 0 and out == "inf\n"


def test_eval_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "eval", "[1,0,]")
    assert code == 2 and "parse error" in err and "position" in err


def test_invariant_text(capsys):
    code, out, _ = run(capsys, "invariant", "2/5")
    assert code == 0
    assert out.splitlines() == ["n = 5", "m = 2", "k = [0,2]", "theta = 2/5"]


def test_invariant_zero(capsys):
    code, out, _ = run(capsys, "invariant", "0/1")
    assert code == 0
    assert "n = 1" in out and "m = 0" in out and "k = []" in out


def test_invariant_domain_error_exits_1(capsys):
    code, _, err = run(capsys, "invariant", "-1/2")
    assert code == 1 and "error" in err


def test_invariant_bad_literal_exits_2(capsys):
    code, _, err = run(capsys, "invariant", "two fifths")
    assert code == 2 and "parse error" in err


def test_rational_command(capsys):
    code, out, _ = run(capsys, "rational", "--n", "5", "--m", "2")
    assert code == 0
    assert out.splitlines() == ["theta = 2/5", "k = [0,2]"]


def test_rational_rejects_noncoprime(capsys):
    code, _, err = run(capsys, "rational", "--n", "4", "--m", "2")
    assert code == 1 and "gcd" in err


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--k", "1,1")
    assert code == 0
    lines = out.splitlines()
    assert "psi = [1,1,3]" in lines
    assert "phi = [1,2,5]" in lines
    assert "defect = 3" in lines
    assert "match = true" in lines


def test_oracle_zero_sequence(capsys):
    code, out, _ = run(capsys, "oracle", "--k", "0")
    assert code == 0
    assert "phi = [1]" in out and "defect = 0" in out and "match = true" in out


def test_oracle_cap_exits_1(capsys):
    code, _, err = run(capsys, "oracle", "--k", "3,3,3,3,3,3", "--cap", "10")
    assert code == 1 and "cap" in err


def test_group_command(capsys):
    code, out, _ = run(capsys, "group", "--a", "-1,1", "--n", "5")
    assert code == 0
    assert "d = 1" in out and "order = 5" in out and "oracle_match = true" in out


def test_group_order_twelve(capsys):
    code, out, _ = run(capsys, "group", "--a", "2,4", "--n", "6")
    assert code == 0 and "order = 12" in out


def test_group_degenerate_exits_1(capsys):
    code, _, err = run(capsys, "group", "--a", "0,0", "--n", "3")
    assert code == 1 and "degenerate" in err


def test_iso_command(capsys):
    code, out, _ = run(capsys, "iso", "--e", "5,-1,1,0,2", "--f", "5,-1,1,1,1")
    assert code == 0 and out == "true\n"
    code, out, _ = run(capsys, "iso", "--e", "5,-1,1,0,2", "--f", "7,-1,1,0,2")
    assert code == 0 and out == "false\n"


def test_tensor_command(capsys):
    code, out, _ = run(capsys, "tensor", "--n", "6", "--m", "2", "--t", "2")
    assert code == 0
    assert out.splitlines() == ["p = 3", "l = 1"]


def test_tensor_no_factorization_exits_1(capsys):
    code, _, err = run(capsys, "tensor", "--n", "5", "--m", "2", "--t", "2")
    assert code == 1 and "no factorization" in err


def test_tower_command(capsys):
    code, out, _ = run(capsys, "tower", "2/5", "--parity", "even")
    assert code == 0
    assert out.splitlines() == [
        "level 1: dims=[2,1] mult=[[2,1],[1,0]]",
        "level 2: dims=[5,2] mult=null",
    ]


def test_tower_odd_parity(capsys):
    code, out, _ = run(capsys, "tower", "2/5", "--parity", "odd")
    assert code == 0
    assert out.splitlines()[-1] == "level 3: dims=[5,3] mult=null"


def test_json_is_deterministic_and_stringly_typed(capsys):
    code, out1, _ = run(capsys, "invariant", "2/5", "--format", "json")
    assert code == 0
    code, out2, _ = run(capsys, "invariant", "2/5", "--format", "json")
    assert out1 == out2
    record = json.loads(out1)
    assert set(record) == {"command", "inputs", "outputs"}
    assert record["command"] == "invariant"
    assert record["outputs"]["n"] == "5"
    assert record["outputs"]["k"] == ["0", "2"]
    assert record["outputs"]["theta"] == "2/5"


def test_json_booleans_stay_boolean(capsys):
    code, out, _ = run(capsys, "iso", "--e", "5,-1,1,0,2", "--f", "5,1,-1,2,0", "--format", "json")
    assert code == 0
    assert json.loads(out)["outputs"]["isomorphic"] is True


def test_json_tower_levels(capsys):
    code, out, _ = run(capsys, "tower", "2/5", "--format", "json")
    record = json.loads(out)
    levels = record["outputs"]["levels"]
    assert levels[0] == {"level": "1", "dims": ["2", "1"], "mult": [["2", "1"], ["1", "0"]]}
    assert levels[1]["mult"] is None


def test_eval_json_inf(capsys):
    code, out, _ = run(capsys, "eval", "[1,0]", "--format", "json")
    assert json.loads(out)["outputs"]["value"] == "inf"
