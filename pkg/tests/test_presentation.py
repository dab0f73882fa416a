import pytest
from hypothesis import given, strategies as st

from artin_commutator.coxeter import catalogue_graph, catalogue_types, odd_components
from artin_commutator.presentation import (Presentation, abelianize, artin_presentation, parse_presentation,
                                           relator_from_text, tietze_eliminate)
from artin_commutator.words import (WordError, bracket_word, commutator, cyclic_reduce, exponent_sums,
                                    format_word, free_reduce, inverse, mul, normalize_relator, parse_word,
                                    power, substitute)

letters = st.integers(1, 4).flatmap(lambda i: st.sampled_from((i, -i)))
words = st.lists(letters, max_size=20).map(tuple)


def test_free_reduce_examples():
    assert free_reduce((1, 2, -2, 3)) == (1, 3)
    assert free_reduce(()) == ()
    assert free_reduce((1, 1, -1, -1)) == ()


def test_normalize_examples():
    assert normalize_relator((2, 1, 2, -1, -2, -1)) == (1, 2, 1, -2, -1, -2)
    assert normalize_relator((-1, 2, 1, 1)) == normalize_relator((2, 1))


@given(words)
def test_normalize_invariant_under_inverse_and_rotation(w):
    n = normalize_relator(w)
    assert normalize_relator(inverse(w)) == n
    c = cyclic_reduce(free_reduce(w))
    if c:
        assert normalize_relator(c[1:] + c[:1]) == n
    assert normalize_relator(n) == n


@given(words, words)
def test_group_laws(u, v):
    assert mul(u, inverse(u)) == ()
    assert inverse(mul(u, v)) == mul(inverse(v), inverse(u))
    assert free_reduce(free_reduce(u)) == free_reduce(u)


def test_bracket_word():
    assert bracket_word(1, 2, 3) == (1, 2, 1)
    assert bracket_word(1, 2, 0) == ()
    assert bracket_word(1, 2, 4) == (1, 2, 1, 2)


def test_misc_word_ops():
    assert power((1, 2), -2) == (-2, -1, -2, -1)
    assert commutator((1,), (2,)) == (1, 2, -1, -2)
    assert exponent_sums((1, 2, -1, 2), 2) == [0, 2]
    assert substitute((1, -2), [(2, 2), (1,)]) == (2, 2, -1)


def test_parse_and_format():
    names = ["a1", "a2", "p-1"]
    assert parse_word("a1 a2^-2 p-1^3", names) == (1, -2, -2, 3, 3, 3)
    assert parse_word("", names) == ()
    assert parse_word("a1^0", names) == ()
    assert format_word((1, -2, -2, 3), names) == "a1 a2^-2 p-1"
    for bad in ("a3", "a1^", "a1^x"):
        with pytest.raises(WordError):
            parse_word(bad, names)


def test_relator_from_text():
    assert relator_from_text("a = b", ["a", "b"]) == (1, -2)
    with pytest.raises(WordError):
        relator_from_text("a = b = a", ["a", "b"])


def test_artin_presentations():
    p = artin_presentation(catalogue_graph("A2"))
    assert p.relators == ((1, 2, 1, -2, -1, -2),)
    p = artin_presentation(catalogue_graph("B2"))
    assert p.relators == ((1, 2, 1, 2, -1, -2, -1, -2),)
    c = artin_presentation(catalogue_graph("A2"), "coxeter")
    assert sorted(c.relators) == sorted([(1, 1), (2, 2), (1, 2, 1, 2, 1, 2)])
    assert len(artin_presentation(catalogue_graph("A3")).relators) == 3  # two braid, one commuting
    with pytest.raises(ValueError):
        artin_presentation(catalogue_graph("A2"), "other")


def test_abelianize_examples():
    a3 = abelianize(artin_presentation(catalogue_graph("A3")))
    assert (a3.free_rank, a3.torsion) == (1, ())
    assert abelianize(artin_presentation(catalogue_graph("F4"))).free_rank == 2
    c = abelianize(artin_presentation(catalogue_graph("A2"), "coxeter"))
    assert (c.free_rank, tuple(c.torsion)) == (0, (2,))
    assert str(c) == "Z/2"


def test_abelianize_odd_components():
    for t in catalogue_types():
        g = catalogue_graph(t)
        ab = abelianize(artin_presentation(g))
        assert ab.free_rank == len(odd_components(g)) and not ab.torsion


def test_abelianize_torsion_and_trivial():
    p = parse_presentation("gens: x y\nrel: x^4\nrel: y^6\nrel: x^2 y^-3")
    ab = abelianize(p)
    assert ab.free_rank == 0 and list(ab.torsion) == [12]
    assert abelianize(Presentation(("x",), ((1,),))).trivial
    assert abelianize(Presentation((), ())).trivial


def test_tietze_single_elimination():
    p = parse_presentation("gens: x y\nrel: y x^-2\nrel: x^3")
    q = tietze_eliminate(p)
    assert q.generators == ("x",)
    assert [normalize_relator(r) for r in q.relators] == [(1, 1, 1)]


def test_tietze_fixpoint():
    p = parse_presentation("gens: x y\nrel: x^2 y^2")
    assert tietze_eliminate(p).generators == ("x", "y")


def test_tietze_protected():
    p = parse_presentation("gens: x y\nrel: y x^-2")
    assert tietze_eliminate(p, protected={"y"}).generators == ("y",) or \
        "y" in tietze_eliminate(p, protected={"y"}).generators


def test_tietze_preserves_abelianization():
    p = parse_presentation("gens: a b c\nrel: c a b^-1\nrel: a b a^-1 b^-1\nrel: c^2 a^-1")
    assert str(abelianize(tietze_eliminate(p))) == str(abelianize(p))


def test_presentation_json_round_trip():
    p = parse_presentation("gens: x y\nrel: x y = y x")
    q = Presentation.from_json(p.to_json())
    assert q.generators == p.generators and q.relators == p.relators


def test_presentation_parse_errors():
    for bad in ("rel: x", "gens: x\nfoo: x", "gens: x\nrel: y"):
        with pytest.raises(WordError):
            parse_presentation(bad)
