"""Smoke tests for the python module against the build-tree extension."""

import idealspaces


def test_analysis_z12():
    a = idealspaces.Analysis("Z/12")
    assert a.ring_size == 12
    assert a.ideal_count == 6
    assert a.krull_dimension == 0
    assert not a.is_local
    prm = a.family("prm")
    assert [a.ideal_name(i) for i in prm] == ["(4)", "(3)", "(2)"]
    sober = a.sober("prm")
    assert sober["direct"]["sober"] and sober["criterion"]["sober"]
    assert a.spectral("prm")["spectral"]
    assert not a.irreducible("prm")["irreducible"]


def test_lattice_operations():
    a = idealspaces.Analysis("Z/12")
    # names are ordered (0),(6),(4),(3),(2),(1); sum is the gcd ideal
    assert a.ideal_name(a.ideal_sum(2, 3)) == "(1)"  # (4) + (3)
    assert a.ideal_name(a.ideal_intersection(4, 3)) == "(6)"  # (2) ∩ (3)
    assert a.ideal_name(a.ideal_product(4, 3)) == "(6)"  # (2)(3)
    assert a.ideal_name(a.radical(2)) == "(2)"  # sqrt((4))
    assert a.contains(5, 0)  # (1) contains (0)
    flags = a.flags(2)
    assert flags["primary"] and not flags["prime"]


def test_product_ring_witness():
    a = idealspaces.Analysis("Z/2 x Z/2")
    r = a.irreducible("prm")
    assert not r["irreducible"]
    assert len(r["witness_pair"]) == 2


def test_empty_family():
    a = idealspaces.Analysis("Z/4")
    assert a.family("reg") == []
    r = a.irreducible("reg")
    assert not r["irreducible"]
    assert r["empty"]
    assert a.sober("reg")["direct"]["sober"]


def test_analyze_report_shape():
    rep = idealspaces.analyze("Z/4", family="prm")
    assert rep["ring"]["size"] == 4
    assert rep["families"]["prm"]["member_count"] == 2
    assert rep["families"]["prm"]["sober_direct"]["sober"]
    assert rep["inclusions"]["all_hold"]


def test_symbolic_z():
    assert idealspaces.reg_z_witness(6, 10) == 7
    assert idealspaces.z_classify(8)["primary"]
    assert not idealspaces.z_classify(12)["primary"]
    cert = idealspaces.reg_z_certificate(200)
    assert cert["irreducible"] and not cert["sober"]
    verdict = idealspaces.prm_z_verdict(200)
    assert verdict["sober_bounded"]


def test_verify_reduced_corpus():
    corpus = {"zmod_max": 8, "poly_p_max": 2, "poly_deg_max": 1, "product_max_factors": 0}
    reports = idealspaces.verify(corpus=corpus, checks=["chk-sober-eq", "chk-adversarial"])
    assert len(reports) == 2
    for rep in reports:
        assert rep["summary"]["fail"] == 0
