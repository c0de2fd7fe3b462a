import json

import pytest

import apsum


def test_membership():
    assert apsum.representations(2, 3, 17) == [(3, 2), (4, 0)]
    assert not apsum.contains(2, 3, 1)
    assert apsum.contains(22, 78, 6106)
    big = 2**300 + 3**200
    assert apsum.representations(2, 3, big) == [(300, 200)]


def test_enumerate():
    assert [v for v, _ in apsum.enumerate(2, 3, 10)] == [2, 3, 4, 5, 7, 9, 10]


def test_numutil():
    assert apsum.power_exponent(531441, 3) == 12
    assert apsum.power_exponent(531442, 3) is None
    assert apsum.ord_p(48, 2) == 4
    assert len(apsum.smooth_enumerate([2, 3, 5, 7, 11, 13], 100)) == 62


def test_progressions():
    found = [(p["N"], p["D"]) for p in apsum.find_progressions(2, 3, 6, 10**6)]
    assert found == [(3, 2), (17, 24)]
    rows, stable = apsum.count_3term(2, 7, [10**8, 10**10, 10**12])
    assert stable and rows[-1][1] == 22


def test_classification():
    assert apsum.theorem1_match(2, 3, 3, 2) == ("family1", 1)
    assert apsum.theorem1_match(2, 9, 41, 24) == ("sporadic", None)
    assert apsum.theorem1_match(2, 3, 100, 1) is None
    r = apsum.sweep(10, 10, 6, 10**8)
    assert r["ok"]
    assert [(h["a"], h["b"], h["N"], h["D"]) for h in r["hits"]] == [(2, 3, 3, 2), (2, 3, 17, 24), (2, 9, 17, 24)]


def test_sunit():
    assert apsum.deweger_3term([2, 3], 10) == [(1, 1, 2), (1, 2, 3), (1, 3, 4), (1, 8, 9)]
    sols = apsum.bajpai_bennett_5term(6, 4, 10**6)
    assert all(sum(s) == 0 for s in sols)
    assert (16, -9, -4, -2, -1) in apsum.bajpai_bennett_5term()


def test_catalog():
    assert "sec4-pillai-list" in apsum.check_ids()
    report = apsum.run_check("sec4-pillai-list")
    assert report["status"] == "pass"
    assert len(report["found"]) == 13
    assert (2, 0, 5, 2, "paper-discrepancy") in [s for s in apsum.lemma21_solve(17)]


def test_families():
    p = apsum.family("prog1", {"n": 5})
    assert (p["a"], p["b"], p["N"], p["D"]) == (5, 9, 2, 4)
    assert p["verified"]
    with pytest.raises(ValueError):
        apsum.family("prog7", {"s": 2, "t": 3})


def test_errors():
    with pytest.raises(apsum.ContractError):
        apsum.contains(3, 2, 5)
    with pytest.raises(ValueError):
        apsum.representations(2, 3, -1)


def test_cli_roundtrip():
    code, out, err = apsum.run_cli(["member", "2", "3", "1"])
    assert code == 0
    assert json.loads(out) == {"a": "2", "b": "3", "member": False, "n": "1", "reps": []}
    assert json.loads(err)["command"] == "member"
