import json

import pytest

bp = pytest.importorskip("bedard_pieces")


def test_group_info():
    info = bp.group_info("B2")
    assert info["order"] == 8
    assert info["num_positive_roots"] == 4
    assert info["longest"] == "0 1 0 1"


def test_a2_census_at_q2():
    census = bp.pieces("A2", [0], torus_rank=3, q=2)
    assert [row["count_at_q"] for row in census["pieces"]] == [42, 84, 168]
    assert census["variety_at_q"] == 294
    assert census["sum_ok"] is True
    assert census["pieces"][2]["steps"] == [{"J": [0], "w": "1"}, {"J": [], "w": "1 0"}]


def test_twisted_counts_are_absent():
    census = bp.pieces("A2", [0], twist="flip")
    assert len(census["pieces"]) == 3
    assert all(row["count_poly"] is None for row in census["pieces"])
    assert census["sum_ok"] is None


def test_psi_phi_round_trip():
    trace = bp.psi("A2", "1 0", [0])
    assert [step["u"] for step in trace["sseq"]] == ["1", "0", ""]
    assert trace["J_inf"] == []
    assert bp.phi("A2", ["1", "0"], [0]) == "1 0"


def test_brute_force_matches_formula():
    z = bp.z_census(3, 2, [0])
    assert z["total"] == 294
    assert [p["count"] for p in z["pieces"]] == [42, 84, 168]
    assert z["orbit_constant"] and z["fibres_ok"]


def test_line_censuses():
    assert bp.line_census(3, 2, 3)["observed_pieces"] == 3
    sp = bp.sp_line_census(2, 2, 2)
    assert sp["lines"] == 85
    assert sum(sp["classes"].values()) == 85


def test_errors():
    with pytest.raises(bp.UnknownType):
        bp.group_info("Z9")
    with pytest.raises(bp.NotMinimalInput):
        bp.psi("A2", "0", [0])
    with pytest.raises(bp.BudgetExceeded):
        bp.z_census(3, 3, [], budget=1000)
    with pytest.raises(bp.BedardError):
        bp.pieces("A2", [7])


def test_cli_front_end():
    code, out, err = bp.run(["pieces", "--type", "A2", "--j", "0", "--q", "2", "--rank", "3"])
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["schema"] == "bedard-pieces/1"
    assert [row["count_at_q"] for row in report["pieces"]] == [42, 84, 168]
    assert bp.run(["pieces", "--type", "Z9"])[0] == 2
