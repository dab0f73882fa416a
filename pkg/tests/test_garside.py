import pytest
from hypothesis import given, settings, strategies as st

from artin_commutator.coxeter import catalogue_graph
from artin_commutator.garside import (GarsideNF, artin_action, artin_action_equal, commutes_with_generators,
                                      crisp_embed_B, delta_word, engine, garside_decompose, is_identity, normal_form,
                                      nu_image, word_equal)
from artin_commutator.presentation import artin_presentation
from artin_commutator.words import WordError, inverse, mul, power

from conftest import random_word

A2 = catalogue_graph("A2")


def test_nf_examples():
    nf = normal_form((1, -1), A2)
    assert nf.inf == 0 and not nf.factors
    nf = normal_form((1, 2) * 3, A2)
    assert nf.inf == 2 and not nf.factors
    nf = normal_form((1, 2, 1), A2)
    assert nf.inf == 1 and not nf.factors


def test_equality_examples():
    assert word_equal((1, 2, 1), (2, 1, 2), A2)
    assert not word_equal((1,), (2,), A2)
    assert not is_identity((1, 2, -1, -2), A2)


def test_nf_json():
    nf = normal_form((1, 2, -1), A2)
    data = nf.to_json(A2.vertices)
    assert data["inf"] == -1
    assert all(isinstance(f, str) for f in data["factors"])


def test_nf_rejects_bad_letter():
    with pytest.raises(WordError):
        normal_form((3,), A2)


def test_delta_squared_central():
    for t in ("A3", "B3", "D4", "H3", "I2(5)"):
        g = catalogue_graph(t)
        assert commutes_with_generators(power(delta_word(g), 2), g)
    assert not commutes_with_generators(delta_word(catalogue_graph("A3")), catalogue_graph("A3"))
    assert commutes_with_generators(delta_word(catalogue_graph("B3")), catalogue_graph("B3"))


def test_decompose_examples():
    U1, U2 = garside_decompose((2, -1), A2)
    assert word_equal(U2, (1, 2) * 3, A2)
    assert word_equal(U1, (2, 2, 1, 1, 2, 1), A2)
    U1, U2 = garside_decompose((1, 2, 2), A2)
    assert U2 == () and U1 == (1, 2, 2)
    U1, U2 = garside_decompose(inverse(power(delta_word(A2), 2)), A2)
    assert U1 == () and word_equal(U2, power(delta_word(A2), 2), A2)


@pytest.mark.parametrize("t", ["A3", "B4", "D4", "F4", "H3", "I2(8)"])
def test_relator_insertion_invariance(t, rng):
    g = catalogue_graph(t)
    rels = artin_presentation(g).relators
    for _ in range(40):
        w = random_word(rng, g.rank, 15)
        r = rng.choice(rels)
        k = rng.randint(0, len(w))
        v = w[:k] + (r if rng.random() < 0.5 else inverse(r)) + w[k:]
        assert normal_form(w, g) == normal_form(v, g)
        assert normal_form(v, g).is_left_weighted()


@pytest.mark.parametrize("t", ["A4", "B3", "H4", "E6"])
def test_nu_compatibility(t, rng):
    g = catalogue_graph(t)
    for _ in range(20):
        w = random_word(rng, g.rank, 20)
        nf = normal_form(w, g)
        back = engine(g).word(nf)
        assert word_equal(back, w, g)
        assert nu_image(back, g) == nu_image(w, g)


letters3 = st.integers(1, 3).flatmap(lambda i: st.sampled_from((i, -i)))


@settings(max_examples=60, deadline=None)
@given(st.lists(letters3, max_size=25).map(tuple), st.lists(letters3, max_size=10).map(tuple))
def test_nf_is_a_homomorphism_invariant(u, v):
    g = catalogue_graph("A3")
    assert word_equal(mul(u, v, inverse(v)), u, g)
    assert normal_form(mul(u, inverse(u)), g).is_identity()
    assert word_equal(u, v, g) == artin_action_equal(u, v, 3)


def test_artin_action_examples():
    assert artin_action_equal((1, 2, 1), (2, 1, 2), 2)
    assert not artin_action_equal((), (1,), 2)
    assert artin_action((1,), 2)[:2] == [(1, 2, -1), (1,)]
    with pytest.raises(ValueError):
        artin_action((3,), 2)


def test_crisp_examples():
    assert crisp_embed_B((2,), 2) == (2, 2)
    assert crisp_embed_B((1,), 3) == (1,)
    rel = mul((1, 2, 1, 2), inverse((2, 1, 2, 1)))
    assert is_identity(crisp_embed_B(rel, 2), A2)
    with pytest.raises(ValueError):
        crisp_embed_B((1,), 1)
    with pytest.raises(ValueError):
        crisp_embed_B((4,), 3)


def test_garside_nf_equality_and_hash():
    a = normal_form((1, 2), A2)
    b = normal_form((1, 2, 2, -2), A2)
    assert a == b and hash(a) == hash(b)
    assert isinstance(a, GarsideNF)
