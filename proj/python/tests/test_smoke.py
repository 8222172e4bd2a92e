import json

import pytest

import skltwist


def test_derived_constants():
    d = skltwist.derived_constants("2", "3")
    assert d == {"gamma": "-5/7", "mu": "4/7", "nu": "-1/7", "lambda": "3/35"}

    d2 = skltwist.derived_constants("3", "5")
    assert d2["gamma"] == "-1/2"
    assert d2["lambda"] == "5/32"


def test_hilbert_series():
    assert skltwist.hilbert("q") == [1, 4, 10, 20, 35]
    assert skltwist.hilbert("qtilde", max_degree=3) == [1, 4, 10, 20]
    assert skltwist.hilbert("btilde") == [1, 4, 8, 12, 16]
    assert skltwist.hilbert("koszul-dual", max_degree=5) == [1, 4, 6, 4, 1, 0]
    with pytest.raises(skltwist.ConfigError):
        skltwist.hilbert("nope")


def test_twist_and_points():
    assert skltwist.twist_roundtrip()
    rep = skltwist.point_scheme()
    assert rep == {"rank3_matches": 20, "random_rank4": 20, "ok": True}
    assert skltwist.theta_constants() == ["1", "4", "4/7", "-36/7", "4"]


def test_geometry_and_torsor():
    assert skltwist.cross_ratio_ok()
    assert skltwist.cross_ratio_ok("3", "5")
    assert skltwist.torsor_strong_grading(2)
    assert skltwist.torsor_strong_grading(3)
    c = skltwist.cohomology_sizes()
    assert (c["z1"], c["b1"], c["h1"]) == (4, 2, 2)
    assert c["is_cocycle"] and not c["is_coboundary"]


def test_check_registry_and_reports():
    checks = skltwist.list_checks()
    ids = [c["id"] for c in checks]
    assert len(ids) == len(set(ids))
    assert "points.scheme" in ids

    results = skltwist.verify("cohomology")
    assert all(r["status"] == "pass" for r in results)

    rep = json.loads(skltwist.report_json("torsor"))
    assert rep["passed"] is True
    assert rep["config"]["alpha"] == "2"
    assert rep["checks"][0]["id"] == "torsor.strong-grading"

    with pytest.raises(skltwist.ConfigError):
        skltwist.verify("no-such-group")
    with pytest.raises(skltwist.ConfigError):
        skltwist.verify("all", max_degree=17)
