import os
import pathlib

import pytest

import crosscap

DATA = pathlib.Path(os.environ.get("CROSSCAP_DATA", pathlib.Path(__file__).resolve().parents[2] / "data"))


def golden(name):
    return crosscap.load_config(str(DATA / "golden" / name))


def test_surface_literals_and_cover():
    s = crosscap.Surface("N5k2")
    assert s.chi == -5
    assert s.double_cover() == crosscap.orientable_surface(4, 4)
    assert str(crosscap.nonorientable_surface(3, 0, 1)) == "N3k0b1"
    with pytest.raises(crosscap.CrosscapError):
        crosscap.Surface("N0")


def test_figure_configuration():
    c = crosscap.load_config(str(DATA / "fig1.crv"))
    assert c.curves == ["a", "b", "c"]
    assert crosscap.validate(c) == []
    assert crosscap.intersection_number(c, "a", "b") == 1
    k = crosscap.classify_curve(c, "c")
    assert k["separating"] and not k["characteristic"]
    assert sorted(map(str, k["components"])) == ["N3k0b1", "S1k0b1"]
    assert crosscap.certificate(c, "c") == "ChainSquare6"


def test_round_trip_and_key():
    c = golden("tree_teven_n6.crv")
    back = crosscap.parse_config(crosscap.serialize(c))
    assert crosscap.serialize(back) == crosscap.serialize(c)
    assert crosscap.anonymous_key(back) == crosscap.anonymous_key(c)


def test_bad_input_raises():
    with pytest.raises(crosscap.CrosscapError, match="SyntaxError"):
        crosscap.parse_config("surface N5k0\ncurve c\n  bogus c\n")
    kinds = [k for k, _ in crosscap.validate(crosscap.load_config(str(DATA / "bigon.crv")))]
    assert "Bigon" in kinds


def test_abelian_system_report():
    c = golden("abelian_g6_k0_s0.crv")
    r = crosscap.verify_max_abelian_system(c, c.curves, 0)
    assert r["verdict"] == "Holds"
    assert r["facts"]["pants"] == 4
    assert len(c.curves) == 6


def test_small_genus_report():
    r = crosscap.small_genus(golden("daisy_n6.crv"), "c")
    assert r["verdict"] == "Holds"
    for side in r["facts"]["sides"]:
        assert side["inferred"] == side["ground_truth"]


def test_small_corpus_and_audit():
    corpus = crosscap.enumerate("N5", 2, 1)
    assert corpus and all(crosscap.validate(c) == [] for c in corpus)
    a = crosscap.audit("separating-pair", "N5", 2, 1)
    assert a["status"] == "Ran"
    assert a["disagreements"] == 0
    assert crosscap.audit("separating-pair", "N4", 2, 1)["status"] == "NotApplicable"
