"""Testing relator consequences with homomorphisms into symmetric groups.

A homomorphism that kills every base relator but not some target is a
certificate that the target is not a consequence of the base.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .words import free_reduce


class SymmetricGroup:
    """S_n with elements indexed 0..n!-1 and a full multiplication table."""

    def __init__(self, n: int):
        self.degree = n
        self.elements = list(itertools.permutations(range(n)))
        index = {p: k for k, p in enumerate(self.elements)}
        size = len(self.elements)
        table = np.empty((size, size), dtype=np.int32)
        for a, p in enumerate(self.elements):
            for b, q in enumerate(self.elements):
                # product p*q acts as "first p, then q"
                table[a, b] = index[tuple(q[p[i]] for i in range(n))]
        self.table = table
        self.inv = np.empty(size, dtype=np.int32)
        for a, p in enumerate(self.elements):
            inv = [0] * n
            for i, j in enumerate(p):
                inv[j] = i
            self.inv[a] = index[tuple(inv)]
        self.identity = index[tuple(range(n))]
        self.size = size

    def __repr__(self):
        return f"S{self.degree}"

    def cycles(self, a: int) -> str:
        """Cycle notation on 1..n."""
        p = self.elements[a]
        seen, out = set(), []
        for i in range(self.degree):
            if i in seen or p[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j + 1)
                j = p[j]
            out.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(out) or "()"


_GROUPS: dict = {}


def symmetric_group(n: int) -> SymmetricGroup:
    if n not in _GROUPS:
        _GROUPS[n] = SymmetricGroup(n)
    return _GROUPS[n]


def evaluate(w, images, G: SymmetricGroup) -> int:
    x = G.identity
    t, inv = G.table, G.inv
    for letter in w:
        img = images[abs(letter) - 1]
        x = t[x, img if letter > 0 else inv[img]]
    return int(x)


@dataclass
class ProbeSpec:
    degree: int
    mode: str = "exhaustive"  # or "random"
    trials: int = 10_000


DEFAULT_PROBES = (ProbeSpec(3), ProbeSpec(4), ProbeSpec(5, "random"), ProbeSpec(6, "random"))


@dataclass
class ProbeResult:
    consistent: bool
    witness: dict | None = None  # {group, images, target}
    stats: list = field(default_factory=list)

    def to_json(self):
        return {"status": "consistent" if self.consistent else "violation",
                "witness": self.witness, "stats": self.stats}


class _Solver:
    """Backtracking over generator images with forced-value propagation."""

    def __init__(self, base, ngens, G):
        self.G = G
        self.ngens = ngens
        self.base = [free_reduce(r) for r in base if r]
        counts = Counter(abs(x) for r in self.base for x in r)
        # most frequent generators are branched first
        self.order = sorted(range(1, ngens + 1), key=lambda g: (-counts[g], g))
        self.gens_of = [frozenset(abs(x) for x in r) for r in self.base]

    def _propagate(self, images):
        """Fill in values forced by relators with one unknown letter; False on contradiction."""
        G = self.G
        changed = True
        while changed:
            changed = False
            for r, gs in zip(self.base, self.gens_of):
                unknown = [g for g in gs if images[g - 1] is None]
                if not unknown:
                    if evaluate(r, images, G) != G.identity:
                        return False
                    continue
                if len(unknown) != 1:
                    continue
                g = unknown[0]
                pos = [k for k, x in enumerate(r) if abs(x) == g]
                if len(pos) != 1:
                    continue
                k = pos[0]
                rest = r[k + 1:] + r[:k]
                val = G.inv[evaluate(rest, images, G)]
                images[g - 1] = int(val if r[k] > 0 else G.inv[val])
                changed = True
        return True

    def exhaustive(self):
        """Yield every homomorphism killing the base (as image lists)."""
        images = [None] * self.ngens

        def rec(images):
            imgs = list(images)
            if not self._propagate(imgs):
                return
            free = [g for g in self.order if imgs[g - 1] is None]
            if not free:
                yield imgs
                return
            g = free[0]
            for v in range(self.G.size):
                imgs[g - 1] = v
                yield from rec(imgs)
            imgs[g - 1] = None

        yield from rec(images)

    def random_trial(self, rng):
        imgs = [None] * self.ngens
        while True:
            if not self._propagate(imgs):
                return None
            free = [g for g in self.order if imgs[g - 1] is None]
            if not free:
                return imgs
            imgs[free[0] - 1] = rng.randrange(self.G.size)


def probe_consequence(base, targets, ngens: int, probes=DEFAULT_PROBES, seed: int = 0,
                      names=None) -> ProbeResult:
    """Search homomorphisms into the probe groups that kill ``base`` but not some target."""
    if not probes:
        raise ValueError("empty probe list")
    rng = random.Random(seed)
    targets = [free_reduce(t) for t in targets]
    result = ProbeResult(True)
    for spec in probes:
        G = symmetric_group(spec.degree)
        solver = _Solver(base, ngens, G)
        homs = 0
        tried = 0
        if spec.mode == "exhaustive":
            source = solver.exhaustive()
        else:
            source = (solver.random_trial(rng) for _ in range(spec.trials))
        for imgs in source:
            tried += 1
            if imgs is None:
                continue
            homs += 1
            for t in targets:
                if evaluate(t, imgs, G) != G.identity:
                    label = names or [f"x{i + 1}" for i in range(ngens)]
                    result.consistent = False
                    result.witness = {
                        "group": repr(G),
                        "images": {label[i]: G.cycles(v) for i, v in enumerate(imgs)},
                        "image_indices": list(imgs),
                        "target": list(t),
                    }
                    result.stats.append({"group": repr(G), "mode": spec.mode, "homs": homs, "tried": tried})
                    return result
        result.stats.append({"group": repr(G), "mode": spec.mode, "homs": homs, "tried": tried})
    return result


def replay_witness(base, targets, witness, degree: int) -> bool:
    """True iff the witness kills every base relator and fails some target."""
    G = symmetric_group(degree)
    imgs = witness["image_indices"]
    if any(evaluate(r, imgs, G) != G.identity for r in base):
        return False
    return any(evaluate(t, imgs, G) != G.identity for t in targets)
