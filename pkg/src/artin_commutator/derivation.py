"""Bounded search for derivations of a word from a set of relators.

A state is a cyclically reduced word (cyclic conjugation does not change
membership in a normal closure).  A move picks a cyclic rotation ``rho`` of a
base relator or its inverse, matches a nonempty prefix ``u`` of ``rho``
against the state at some cyclic position, and replaces ``u`` by ``v^-1``
where ``rho = u v``.  A certificate is the list of moves; replaying it from
the target must end at the empty word.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .words import cyclic_reduce, free_reduce, inverse, normalize_relator


@dataclass(frozen=True)
class Step:
    pos: int  # start position in the current word
    relator: int  # index into the base list
    inverted: bool
    rotation: int
    length: int  # number of matched letters

    def to_json(self):
        return [self.pos, self.relator, int(self.inverted), self.rotation, self.length]


def _variants(base):
    out = []
    for idx, r in enumerate(base):
        c = cyclic_reduce(r)
        if not c:
            continue
        seen = set()
        for inv, w in ((False, c), (True, inverse(c))):
            for rot in range(len(w)):
                rho = w[rot:] + w[:rot]
                if rho in seen:
                    continue
                seen.add(rho)
                out.append((idx, inv, rot, rho))
    return out


def apply_step(w, base, step: Step):
    c = cyclic_reduce(base[step.relator])
    if step.inverted:
        c = inverse(c)
    rho = c[step.rotation:] + c[:step.rotation]
    L = len(w)
    rot = w[step.pos:] + w[:step.pos]
    u, v = rho[:step.length], rho[step.length:]
    if step.length > L or rot[:step.length] != u:
        raise ValueError("step does not match the word")
    return cyclic_reduce(inverse(v) + rot[step.length:])


def replay(target, base, steps) -> bool:
    w = cyclic_reduce(target)
    try:
        for s in steps:
            w = apply_step(w, base, s)
    except (ValueError, IndexError):
        return False
    return w == ()


def derivation_search(base, target, max_len: int = 24, max_depth: int = 20, max_nodes: int = 200_000):
    """Best-first search (shortest word first) for a certificate that target lies in <<base>>.

    Returns the list of steps, or None when nothing is found within the bounds.
    """
    base = [free_reduce(r) for r in base]
    variants = _variants(base)
    by_first: dict = {}
    for v in variants:
        by_first.setdefault(v[3][0], []).append(v)
    start = cyclic_reduce(target)
    if not start:
        return []
    counter = itertools.count()
    heap = [(len(start), 0, next(counter), start, ())]
    seen = {normalize_relator(start)}
    nodes = 0
    while heap and nodes < max_nodes:
        _, depth, _, w, path = heapq.heappop(heap)
        nodes += 1
        if depth >= max_depth:
            continue
        L = len(w)
        for pos in range(L):
            for idx, inv, rot, rho in by_first.get(w[pos], ()):
                # longest match of rho's prefix at pos, cyclically
                k = 0
                m = min(len(rho), L)
                while k < m and w[(pos + k) % L] == rho[k]:
                    k += 1
                for j in range(1, k + 1):
                    rest = w[pos + j:] + w[:pos] if pos + j <= L else w[(pos + j) % L:pos]
                    nw = cyclic_reduce(inverse(rho[j:]) + rest)
                    if len(nw) > max_len:
                        continue
                    step = Step(pos, idx, inv, rot, j)
                    if not nw:
                        return list(path) + [step]
                    key = normalize_relator(nw)
                    if key in seen:
                        continue
                    seen.add(key)
                    heapq.heappush(heap, (len(nw), depth + 1, next(counter), nw, path + (step,)))
    return None
