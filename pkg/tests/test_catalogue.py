import pytest

from artin_commutator import catalogue as cat
from artin_commutator.coxeter import SphericalType, catalogue_graph
from artin_commutator.garside import word_equal
from artin_commutator.schreier import degree_vector


def test_a2_entry():
    e = cat.commutator_presentation("A2")
    g = catalogue_graph("A2")
    assert e.kind == "free" and e.presentation.generators == ("p0", "p1")
    assert word_equal(e.embeddings["p0"], (2, -1), g)
    assert word_equal(e.embeddings["p1"], (1, 2, -1, -1), g)


def test_i2_5_entry():
    e = cat.commutator_presentation("I2(5)")
    assert e.kind == "free" and len(e.presentation.generators) == 4
    assert not e.presentation.relators
    g = catalogue_graph("I2(5)")
    for k, name in enumerate(e.presentation.generators):
        assert word_equal(e.embeddings[name], (1,) * k + (2,) + (-1,) * (k + 1), g)


def test_d4_entry():
    e = cat.commutator_presentation("D4")
    p = e.presentation
    assert len(p.generators) == 6 and len(p.relators) == 9
    assert word_equal(e.embeddings["c"], (2, -1, 4, -2), catalogue_graph("D4"))


def test_unknown_type():
    with pytest.raises(cat.UnknownType):
        cat.commutator_presentation(SphericalType("Q", 3))


@pytest.mark.parametrize("t", ["A4", "D4", "B3", "B5", "F4", "H3", "I2(6)", "I2(7)", "E6"])
def test_soundness(t):
    rep = cat.verify_soundness(cat.commutator_presentation(t))
    assert rep.passed, [r for r in rep.relators if not r[1]]


def test_soundness_catches_corruption():
    e = cat.commutator_presentation("A4")
    rep = cat.verify_soundness(e, extra=["b = p0 q3 p1^-1"])
    assert not rep.passed
    bad = [r for r in rep.relators if not r[1]]
    assert len(bad) == 1 and bad[0][2] is not None
    assert rep.to_json()["status"] == "fail"


def test_properties_examples():
    assert cat.properties_row("A4").computed_perfect
    f4 = cat.properties_row("F4")
    assert not f4.computed_perfect and f4.abelianization.free_rank == 4
    assert not cat.properties_row("A3").computed_perfect
    assert all(r.match for r in cat.properties_table())


def test_a3_structure():
    rep = cat.verify_a3_structure()
    assert rep.passed
    bad = cat.verify_a3_structure(("p0^-1 b p0 = q^2",))
    assert not bad.passed


def test_indicability_examples():
    v = {x.type: x for x in cat.indicability_report()}
    assert v["A5"].locally_indicable == "no"
    assert (v["F4"].locally_indicable, v["F4"].right_orderable, v["F4"].bi_orderable) == \
        ("unknown", "unknown", "no")
    assert (v["D4"].locally_indicable, v["D4"].right_orderable, v["D4"].bi_orderable) == ("yes", "yes", "no")
    assert all(x.consistent for x in v.values())


def test_inclusions():
    data = cat.inclusions()
    assert data["H4"] == ["E8"]
    assert data["I2(m)"] == ["A_{m-1}"]
    assert data["B_n"] == ["A_n", "A_{2n-1}", "A_{2n}", "D_{n+1}"]
    assert [str(t) for t in cat.inclusion_targets("B3")] == ["A3", "A5", "A6", "D4"]
    assert [str(t) for t in cat.inclusion_targets("I2(7)")] == ["A6"]


def test_crisp_embedding_small():
    assert cat.verify_crisp_embedding(3).passed


def test_b4_adjudication():
    adj = cat.adjudicate_b4(windows=(3,))
    assert adj.stable
    assert adj.verbatim[3]["extra"] == 0 and adj.verbatim[3]["missing"] > 0


def test_b2_literal_relation():
    text, ok = cat.dihedral_relation_witness("B2", 5)
    assert ok and text


def test_b3_generators_have_degree_zero():
    g = catalogue_graph("B3")
    for name, deg, rewritten in cat.b3_generator_report():
        assert deg == (0, 0) and rewritten
    e = cat.commutator_presentation("B3")
    for w in e.embeddings.values():
        assert not any(degree_vector(w, g))


def test_entry_json():
    data = cat.commutator_presentation("B2").to_json()
    assert data["kind"] == "family" and "verbatim_generators" in data
