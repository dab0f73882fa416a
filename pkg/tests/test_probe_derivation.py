import pytest

from artin_commutator.derivation import derivation_search, replay
from artin_commutator.presentation import relator_from_text
from artin_commutator.probe import ProbeSpec, evaluate, probe_consequence, replay_witness, symmetric_group
from artin_commutator.words import commutator


def test_symmetric_group_basics():
    G = symmetric_group(4)
    assert len(G.elements) == 24 if hasattr(G, "elements") else True
    assert evaluate((), [], G) == G.identity


def test_probe_finds_order_two_image():
    res = probe_consequence([(1, 1)], [(1,)], 1, (ProbeSpec(3),))
    assert not res.consistent
    assert res.witness["group"] == "S3"
    assert replay_witness([(1, 1)], [(1,)], res.witness, 3)


def test_probe_consistent_abelian():
    base = [commutator((1,), (2,))]
    target = [commutator((1,), (2, 2))]
    res = probe_consequence(base, target, 2, (ProbeSpec(3), ProbeSpec(4)))
    assert res.consistent
    assert [s["group"] for s in res.stats] == ["S3", "S4"]


def test_probe_deterministic_seed():
    base = [(1, 1, 1)]
    a = probe_consequence(base, [(2,)], 2, (ProbeSpec(5, "random", 200),), seed=3)
    b = probe_consequence(base, [(2,)], 2, (ProbeSpec(5, "random", 200),), seed=3)
    assert a.to_json() == b.to_json()


def test_probe_requires_probes():
    with pytest.raises(ValueError):
        probe_consequence([], [], 1, ())


def test_derivation_examples():
    assert derivation_search([(1, 1)], (1,)) is None
    steps = derivation_search([(1,)], (1, 1))
    assert steps is not None and replay((1, 1), [(1,)], steps)


def test_derivation_shift_relation():
    names = ["p-1", "p0", "p1", "p2", "p3", "q"]
    base = [relator_from_text(t, names) for t in
            ("p0 q = q p1", "p1 q = q p0^-1 p1", "p0 p1^-1 p-1^-1", "p1 p2^-1 p0^-1", "p2 p3^-1 p1^-1")]
    target = relator_from_text("p2 q = q p3", names)
    steps = derivation_search(base, target)
    assert steps is not None and replay(target, base, steps)
    assert not replay(relator_from_text("p2 q = q p2", names), base, steps)
