import pytest

import babelbuild as bb


def ls2(*terms, q=5):
    return {"q": q, "terms": [{"j": j, "i": i, "c": c} for j, i, c in terms]}


G = [ls2((0, 0, 1)), ls2((-1, 0, 1)), ls2((0, 1, 1)), ls2((0, 0, 1), (-1, 1, 1))]


def test_suite_names_cover_modules():
    names = bb.suite_names()
    for n in ("presentation", "metric", "bruhat", "cartan", "cellprod", "fixer", "all"):
        assert n in names


def test_metric_suite_deterministic():
    a = bb.run_suite("metric", seed=7, samples=50)
    b = bb.run_suite("metric", seed=7, samples=50, threads=3)
    assert a["pass"]
    assert a["properties"] == b["properties"]


def test_unknown_suite_raises():
    with pytest.raises(bb.BabelError) as e:
        bb.run_suite("nope")
    assert e.value.code == "UnknownSuite"


def test_lex_cmp_infinite_beats_finite():
    w2 = [{"exps": [1], "num": "1", "den": "1"}]
    big = [{"exps": [0], "num": "1000000", "den": "1"}]
    assert bb.lex_cmp(w2, big) == "greater"
    assert bb.lex_cmp(big, w2) == "less"


def test_weyl_relation_and_locate():
    assert bb.weyl_normal_form("w2 w2")["text"] == "{fin: 0, trans: (0)}"
    assert bb.locate([[1, 0]]) is None
    assert bb.locate([[0, "1/2"]])["fin"] == 0


def test_dist2_and_circumcenter_a2():
    assert bb.dist2([[0, 0], [0, 0]], [[0, 1], [0, 1]], phi="A2") == [{"exps": [0], "num": "4", "den": "1"}]
    c = bb.circumcenter([[[0, 0], [0, 0]], [[0, 2], [0, 0]], [[0, 0], [0, 2]]], phi="A2")
    assert c["center"] == [["0", "1"], ["0", "1"]]


def test_sl2_decompositions():
    b = bb.bruhat(G)
    assert set(b) == {"b", "n", "bp", "label"}
    assert bb.cell(G) == b["label"]
    assert bb.cartan(G)["m"] == {"j": 1, "i": 0}
    assert bb.building_dist(G, G) == ["0", "0"]


def test_malformed_input():
    with pytest.raises(bb.BabelError) as e:
        bb.bruhat("{not json")
    assert e.value.code == "InvalidInput"


def test_render_is_svg_and_stable():
    s = bb.render_apartment("A2")
    assert s.startswith("<svg") or s.startswith("<?xml")
    assert s == bb.render_apartment("A2")
    assert "<svg" in bb.render_enclosure()
