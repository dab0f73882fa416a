import pytest

from artin_commutator.coxeter import catalogue_graph
from artin_commutator.garside import is_identity
from artin_commutator.lemmas import LEMMA_IDS, lemma_33_relations, lemma_sets, verify_lemma
from artin_commutator.presentation import relator_from_text
from artin_commutator.probe import ProbeSpec
from artin_commutator.words import WordError, substitute

from artin_commutator.catalogue import b_word, p_word, q_word

FAST = (ProbeSpec(3), ProbeSpec(4))


def test_shift_lemma_certificates():
    rep = verify_lemma("3.2", (-2, 2), FAST, cert_window=(-2, 2))
    assert rep.consistent
    assert sorted(c.label for c in rep.certified) == sorted(f"shift[{k}]" for k in range(-2, 3))
    data = rep.to_json()
    assert data["status"] == "consistent" and len(data["directions"]) == 2


def test_twist_lemma_small_window():
    rep = verify_lemma("3.1", (-1, 1), FAST, certificates=False)
    assert rep.consistent


def test_twist_lemma_altered_relation_is_caught():
    rep = verify_lemma("3.1", (-1, 1), FAST, certificates=False, alter={"p0-a": "p0 a p0^-1 = b a"})
    assert not rep.consistent
    assert rep.to_json()["status"] == "violation"
    witness = [r for _, r in rep.directions if not r.consistent][0].witness
    assert witness["replays"]


def test_alter_unknown_label():
    with pytest.raises(WordError):
        verify_lemma("3.1", (-1, 1), FAST, alter={"nope": "a = b"})


def test_unknown_lemma():
    with pytest.raises(ValueError):
        lemma_sets("9.9")
    assert LEMMA_IDS == ("3.1", "3.2", "3.3")


def test_recursion_covers_window():
    sets = lemma_sets("3.2", (-2, 2))
    lo, hi = sets.p_range
    assert lo <= -2 and hi >= 3
    assert all(f"p{k}" in sets.names for k in range(lo, hi + 1))


@pytest.mark.parametrize("k", range(-3, 4))
def test_indexed_formulas_hold_in_a3(k):
    """The four indexed conjugation formulas evaluated with a = q, b = b, p_k in the A3 group."""
    g = catalogue_graph("A3")
    sets = lemma_sets("3.3", (min(k, -1), max(k, 1)))
    images = [p_word(int(n[1:])) if n.startswith("p") else (q_word(3) if n == "a" else b_word())
              for n in sets.names]
    for text in lemma_33_relations(k).values():
        assert is_identity(substitute(relator_from_text(text, sets.names), images), g), text


@pytest.mark.parametrize("k", [-2, -1, 1, 2])
def test_literal_sign_fails(k):
    """With a^k b in place of a^-k b the first formula is false for k != 0."""
    g = catalogue_graph("A3")
    sets = lemma_sets("3.3", (min(k, -1), max(k, 1)))
    images = [p_word(int(n[1:])) if n.startswith("p") else (q_word(3) if n == "a" else b_word())
              for n in sets.names]
    text = f"p{k} a p{k}^-1 = a^{k} b"
    assert not is_identity(substitute(relator_from_text(text, sets.names), images), g)
