import pytest

import _cayley as cc


def test_parse_and_print_round_trip():
    x = cc.parse("S{2,1}U*")
    assert repr(x) == "S{2,1,0}U*"
    assert cc.parse(repr(x)) == x
    r = cc.parse("R")
    assert cc.parse(repr(r)) == r


def test_parse_errors():
    with pytest.raises(cc.ExpressionError):
        cc.parse("S{2,2}X")
    with pytest.raises(cc.ExpressionError):
        cc.parse("O[1]", allow_shift=False)


def test_cohomology_on_both_spaces():
    gr = cc.coh_gr("S{2,1,0}U*")
    assert gr == {0: [((2, 1, 0, 0, 0, 0, 0), 1, 112)]}
    cg = cc.coh_cg("S{0,0,-3}U*")
    assert cg["determined"]
    assert cg["cohomology"] == {2: [((-1, -1, -1, -1, -1, -1, -1), 1, 1)]}
    assert cc.coh_cg("O")["cohomology"] == {0: [((0,) * 7, 1, 1)]}


def test_ext_and_euler():
    e = cc.ext("S{2,1}U*", "S{2,1}U*(-1)")
    assert e["determined"]
    assert e["dims"] == {2: 1}
    assert cc.euler("O", "O") == 1
    assert cc.euler("O", "U*") == 7


def test_collection_checks():
    assert cc.check_cg15()
    assert len(cc.collection_names()) == 15
    assert cc.check_collection(["O", "U*"])["verdict"] == "EXCEPTIONAL"
    assert cc.check_collection(["O", "O"])["verdict"] == "FAILED"


def test_jacobi_identity():
    assert cc.jacobi_identity()


def test_cli_entry_point():
    code, out, err = cc.run(["euler", "O", "O"])
    assert (code, out) == (0, "1\n")
    code, out, err = cc.run(["frobnicate"])
    assert code == 64


def test_verify_battery_subset():
    results = cc.verify_all(seed=7, jobs=2)
    assert len(results) == 9
    assert all(r["pass"] for r in results)
