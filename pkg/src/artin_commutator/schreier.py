"""Reidemeister-Schreier rewriting for the kernel of the degree map.

Cosets of the commutator subgroup are indexed by degree vectors in Z^m
(m = number of odd components, m <= 2).  The transversal is
``b1^k`` (m = 1) or ``b1^k b2^l`` (m = 2) where b_c is the least vertex of
component c.  Generators are s_{K,a} = K a bar(K a)^-1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .coxeter import CoxeterGraph, GraphError, odd_components, require_spherical
from .presentation import Presentation, artin_presentation, tietze_eliminate
from .words import format_word, free_reduce, inverse, mul, normalize_relator


class UnsupportedTransversal(GraphError):
    pass


@dataclass(frozen=True, order=True)
class SchreierGen:
    vertex: int  # 0-based
    coset: tuple

    def name(self, g: CoxeterGraph) -> str:
        return f"s({','.join(map(str, self.coset))};{g.vertices[self.vertex]})"


class Rewriter:
    """Degree maps, transversal and tau for one graph."""

    def __init__(self, g: CoxeterGraph):
        self.graph = g
        self.components = odd_components(g)
        self.m = len(self.components)
        if self.m > 2:
            raise UnsupportedTransversal(f"{self.m} odd components; only m <= 2 is supported")
        self.comp_of = {}
        for c, comp in enumerate(self.components):
            for v in comp:
                self.comp_of[v] = c
        self.bases = [comp[0] for comp in self.components]

    def degree_vector(self, w) -> tuple:
        d = [0] * self.m
        for x in w:
            v = abs(x) - 1
            if v not in self.comp_of:
                raise ValueError(f"letter {x} out of range")
            d[self.comp_of[v]] += 1 if x > 0 else -1
        return tuple(d)

    def transversal_word(self, K) -> tuple:
        if len(K) != self.m:
            raise ValueError("degree vector has the wrong length")
        out = []
        for c, k in enumerate(K):
            b = self.bases[c] + 1
            out.extend([b if k > 0 else -b] * abs(k))
        return tuple(out)

    def step(self, K, v: int) -> tuple:
        K = list(K)
        K[self.comp_of[v]] += 1
        return tuple(K)

    def is_trivial(self, K, v: int) -> bool:
        T = self.transversal_word(K)
        return free_reduce(T + (v + 1,)) == self.transversal_word(self.step(K, v))

    def ambient(self, s: SchreierGen) -> tuple:
        return mul(self.transversal_word(s.coset), (s.vertex + 1,),
                   inverse(self.transversal_word(self.step(s.coset, s.vertex))))

    def tau(self, w) -> list:
        """Rewrite a degree-zero word as a freely reduced list of (SchreierGen, +-1)."""
        K = (0,) * self.m
        out: list = []
        for x in w:
            v = abs(x) - 1
            if x > 0:
                coset = K
                K = self.step(K, v)
                sign = 1
            else:
                Kl = list(K)
                Kl[self.comp_of[v]] -= 1
                K = coset = tuple(Kl)
                sign = -1
            if self.is_trivial(coset, v):
                continue
            letter = (SchreierGen(v, coset), sign)
            if out and out[-1] == (letter[0], -sign):
                out.pop()
            else:
                out.append(letter)
        if any(K):
            raise ValueError(f"word has nonzero degree {K}")
        return out

    def evaluate(self, sword) -> tuple:
        """Ambient Artin word of a word in s-generators."""
        return mul(*[self.ambient(s) if e > 0 else inverse(self.ambient(s)) for s, e in sword])


@lru_cache(maxsize=None)
def rewriter(g: CoxeterGraph) -> Rewriter:
    return Rewriter(g)


def degree_vector(w, g: CoxeterGraph) -> tuple:
    return rewriter(g).degree_vector(w)


def transversal_word(K, g: CoxeterGraph) -> tuple:
    return rewriter(g).transversal_word(tuple(K))


def schreier_generator(K, a: int, g: CoxeterGraph):
    """(SchreierGen, trivialFlag, ambient word) for 0-based vertex ``a``."""
    rw = rewriter(g)
    s = SchreierGen(a, tuple(K))
    return s, rw.is_trivial(s.coset, a), rw.ambient(s)


def tau_rewrite(w, g: CoxeterGraph) -> list:
    return rewriter(g).tau(w)


def format_sword(sword, g: CoxeterGraph) -> str:
    if not sword:
        return "1"
    return " ".join(s.name(g) + ("" if e > 0 else "^-1") for s, e in sword)


@dataclass
class WindowResult:
    presentation: Presentation
    gens: tuple  # SchreierGen per presentation generator
    dropped: int
    N: int


def _in_window(K, N) -> bool:
    return all(-N <= k <= N for k in K)


def derive_window(g: CoxeterGraph, N: int) -> WindowResult:
    """Window of the Reidemeister-Schreier presentation with coset coordinates in [-N, N]."""
    require_spherical(g)
    rw = rewriter(g)
    cosets = list(itertools.product(range(-N, N + 1), repeat=rw.m))
    gens = sorted(SchreierGen(v, K) for K in cosets for v in range(g.rank) if not rw.is_trivial(K, v))
    index = {s: i + 1 for i, s in enumerate(gens)}
    base = artin_presentation(g).relators
    pad = max((len(r) for r in base), default=0)
    rels = []
    dropped = 0
    for K in itertools.product(range(-N - pad, N + pad + 1), repeat=rw.m):
        T = rw.transversal_word(K)
        for R in base:
            sw = rw.tau(mul(T, R, inverse(T)))
            if not sw:
                continue
            if all(s in index for s, _ in sw):
                rels.append(tuple(index[s] * e for s, e in sw))
            elif _in_window(K, N):
                dropped += 1
    names = tuple(s.name(g) for s in gens)
    ambient = {n: rw.ambient(s) for n, s in zip(names, gens)}
    return WindowResult(Presentation(names, tuple(rels), ambient), tuple(gens), dropped, N)


# -- display names and reduction to the standard generators ---------------

def _commutes(g: CoxeterGraph, u: int, v: int) -> bool:
    return u != v and g.label(u, v) == 2


def protected_gens(g: CoxeterGraph, gens) -> set:
    """Generators kept by the reduction: coordinate c collapses to 0 when the
    vertex commutes with the base of component c."""
    rw = rewriter(g)
    keep = set()
    for s in gens:
        ok = True
        for c, b in enumerate(rw.bases):
            if s.coset[c] != 0 and _commutes(g, s.vertex, b):
                ok = False
        if ok and not rw.is_trivial(s.coset, s.vertex):
            keep.add(s)
    return keep


def display_name(g: CoxeterGraph, s: SchreierGen) -> str | None:
    """Paper-style name (p_k, q_i, r_l) when the type has a standard renaming."""
    t = require_spherical(g)
    rw = rewriter(g)
    v = s.vertex + 1
    if rw.m == 1 and rw.bases == [0]:
        (k,) = s.coset
        if v == 2:
            return f"p{k}"
        if v >= 3 and k == 0:
            return f"q{v}"
        return None
    if t.family == "B" and t.rank >= 4:
        n = t.rank
        k, l = s.coset
        if v == 2 and l == 0:
            return f"p{k}"
        if v == n - 1 and k == 0:
            return f"q{l}" if n == 4 else f"r{l}"
        if 3 <= v <= n - 2 and k == 0 and l == 0:
            return f"q{v}"
    return None


@dataclass
class ReducedWindow:
    presentation: Presentation
    dropped: int
    raw: WindowResult


def reduce_window(g: CoxeterGraph, N: int) -> ReducedWindow:
    """derive_window followed by Tietze elimination down to the protected
    generators, renaming, and removal of duplicate relators."""
    win = derive_window(g, N)
    p = win.presentation
    keep = protected_gens(g, win.gens)
    keep_names = {s.name(g) for s in keep}
    red = tietze_eliminate(p, protected=keep_names)
    by_name = {s.name(g): s for s in win.gens}
    names = []
    for n in red.generators:
        d = display_name(g, by_name[n])
        names.append(d if d is not None else n)
    rels = sorted(set(red.relators), key=lambda r: (len(r), [(abs(x), x < 0) for x in r]))
    ambient = {d: red.ambient[n] for d, n in zip(names, red.generators) if n in red.ambient}
    return ReducedWindow(Presentation(tuple(names), tuple(rels), ambient), win.dropped, win)


def named_relators(p: Presentation) -> list:
    """Relators as tuples of (name, sign) pairs, for comparison across presentations."""
    return [tuple((p.generators[abs(x) - 1], 1 if x > 0 else -1) for x in r) for r in p.relators]


def canonical_named(rel) -> tuple:
    """Normalize a relator given as (name, sign) pairs."""
    names = sorted({n for n, _ in rel}, key=_name_key)
    idx = {n: i + 1 for i, n in enumerate(names)}
    w = normalize_relator(tuple(idx[n] * e for n, e in rel))
    return tuple((names[abs(x) - 1], 1 if x > 0 else -1) for x in w)


def _name_key(n: str):
    import re

    mt = re.fullmatch(r"([a-z]+)(-?\d+)", n)
    if mt:
        return (0, mt.group(1), int(mt.group(2)), "")
    return (1, "", 0, n)


def format_named(rel) -> str:
    if not rel:
        return "1"
    return " ".join(n if e > 0 else f"{n}^-1" for n, e in rel)


@dataclass
class CompareReport:
    missing: list  # derived but not expected
    extra: list  # expected but not derived
    dropped: int = 0

    @property
    def match(self) -> bool:
        return not self.missing and not self.extra

    def to_json(self):
        return {
            "status": "match" if self.match else "mismatch",
            "missing": [format_named(r) for r in self.missing],
            "extra": [format_named(r) for r in self.extra],
            "droppedRelators": self.dropped,
            "certificates": [],
        }


def compare_presentations(derived: Presentation, expected, dropped: int = 0) -> CompareReport:
    """Multiset comparison of normalized relators.

    ``expected`` holds (name, sign) relators.  "extra" lists expected relators
    absent from the derived set, "missing" the derived relators absent from
    the expected list.
    """
    from collections import Counter

    d = Counter(canonical_named(r) for r in named_relators(derived))
    e = Counter(canonical_named(r) for r in expected)
    d.pop((), None)
    e.pop((), None)
    missing = sorted((d - e).elements(), key=repr)
    extra = sorted((e - d).elements(), key=repr)
    return CompareReport(missing, extra, dropped)


def words_to_str(w, g: CoxeterGraph) -> str:
    return format_word(w, g.vertices)
