import json

import pytest

from bdsweyl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pair_text(capsys):
    code, out, _ = run(capsys, "pair", "B", "3", "--node", "3")
    assert code == 0
    assert "alpha0 = a2+2a3" in out
    assert "g0 components: A3" in out
    assert "comarks of alpha0: [0, 1, 1]" in out


def test_pair_invalid_node_exits_2(capsys):
    code, _, err = run(capsys, "pair", "B", "3", "--node", "1")
    assert code == 2
    assert "mark a_1 = 1" in err


def test_pair_invalid_rank_exits_2(capsys):
    code, _, err = run(capsys, "pair", "D", "2", "--node", "1")
    assert code == 2
    assert "rank" in err


def test_missing_node_reports_eligible(capsys):
    code, _, err = run(capsys, "pair", "B", "3")
    assert code == 2
    assert "[2, 3]" in err


def test_alambda_section78(capsys):
    code, out, _ = run(capsys, "alambda", "B", "3", "--node", "3",
                       "--weight", "h2=1,h0=1", "--degree", "12")
    assert code == 0
    assert "C[P(2,1), P(3,1)] / (P(2,1)P(3,1))" in out
    assert "Krull dimension: 1" in out
    assert "[1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2]" in out


def test_alambda_zero_weight(capsys):
    code, out, _ = run(capsys, "alambda", "B", "3", "--node", "3", "--weight", "h0=0")
    assert code == 0
    assert "A_lambda = C" in out
    assert "W(lambda) irreducible: true" in out


def test_alambda_bad_weight_exits_2(capsys):
    code, _, err = run(capsys, "alambda", "B", "3", "--node", "3", "--weight", "bogus")
    assert code == 2
    assert "weight" in err


def test_alambda_delta_weight_conversion(capsys):
    # ambient weight omega_2 of B3 restricts to h2=1, h0=1
    code, out, _ = run(capsys, "alambda", "B", "3", "--node", "3",
                       "--delta-weight", "h2=1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["weight"] == "h2=1,h0=1"


def test_alambda_json_schema(capsys):
    code, out, _ = run(capsys, "alambda", "B", "4", "--node", "4",
                       "--weight", "h1=2,h3=1,h0=3", "--degree", "12", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert payload["command"] == "alambda"
    assert payload["krull_dim"] == 5
    assert payload["d_lambda"] == 5
    assert payload["hilbert"]["coefficients"][0] == 1
    assert payload["flags"]["koszul"] == "true"
    assert payload["verdicts"] == {"alambda_trivial": False, "global_weyl_irreducible": False}


def test_localdim(capsys):
    code, out, _ = run(capsys, "localdim", "B", "3", "--node", "3",
                       "--fundamental", "2", "--power", "1")
    assert code == 0
    assert "= 22" in out
    code, out, _ = run(capsys, "localdim", "B", "3", "--node", "3",
                       "--fundamental", "0", "--power", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["value"] == 64


def test_localdim_bad_index_exits_2(capsys):
    code, _, err = run(capsys, "localdim", "B", "3", "--node", "3", "--fundamental", "7")
    assert code == 2


def test_idealpoint_deterministic(capsys):
    args = ("idealpoint", "B", "3", "--node", "3", "--weight", "h2=1,h0=1",
            "--seed", "11", "--points", "1", "--format", "json")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["verified"] is True
    for val in payload["pi"].values():
        assert "/" in val or val.lstrip("-").isdigit()


def test_garland_check(capsys):
    code, out, _ = run(capsys, "garland-check", "G", "2", "--node", "2", "--order", "3")
    assert code == 0
    assert "pass" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-rank", "4", "--seed", "1")
    assert code == 0
    assert "overall: pass" in out


def test_verify_all_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-rank", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    assert all(r["ok"] for r in payload["results"])


def test_byte_identical_reports(capsys):
    args = ("alambda", "C", "3", "--node", "1", "--weight", "h2=2,h3=1,h0=2", "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
