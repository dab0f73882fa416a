"""Finite presentations: parsing, Artin/Coxeter presentations, abelian invariants, Tietze moves."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .coxeter import INF, CoxeterGraph
from .words import (
    WordError,
    bracket_word,
    exponent_sums,
    format_word,
    free_reduce,
    inverse,
    mul,
    normalize_relator,
    parse_word,
)


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple = ()
    ambient: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise WordError("duplicate generator names")
        rels = []
        for r in self.relators:
            if any(x == 0 or abs(x) > n for x in r):
                raise WordError(f"relator {r} uses an undeclared generator")
            rels.append(normalize_relator(r))
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def word(self, text: str):
        return parse_word(text, self.generators)

    def format(self, w) -> str:
        return format_word(w, self.generators)

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += [f"rel: {self.format(r)}" for r in self.relators]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        rels = []
        for r in self.relators:
            syl = []
            for x in r:
                g, e = abs(x) - 1, (1 if x > 0 else -1)
                if syl and syl[-1][0] == g and (syl[-1][1] > 0) == (e > 0):
                    syl[-1][1] += e
                else:
                    syl.append([g, e])
            rels.append(syl)
        return {"generators": list(self.generators), "relators": rels}

    @classmethod
    def from_json(cls, data) -> Presentation:
        if isinstance(data, str):
            data = json.loads(data)
        gens = tuple(data["generators"])
        rels = []
        for syl in data["relators"]:
            w = []
            for g, e in syl:
                w.extend([g + 1 if e > 0 else -(g + 1)] * abs(e))
            rels.append(free_reduce(w))
        return cls(gens, tuple(rels))


def relator_from_text(text: str, names: Sequence[str]):
    """``w1 = w2`` becomes w1 w2^-1; a bare word is taken as is."""
    if "=" in text:
        lhs, _, rhs = text.partition("=")
        if "=" in rhs:
            raise WordError("at most one '=' per relation")
        return mul(parse_word(lhs, names), inverse(parse_word(rhs, names)))
    return parse_word(text, names)


def parse_presentation(text: str) -> Presentation:
    gens: list = []
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("gens", "rel"):
            raise WordError(f"line {lineno}: expected 'gens:' or 'rel:'")
        if key == "gens":
            gens.extend(rest.split())
        else:
            raw.append((lineno, rest))
    rels = []
    for lineno, body in raw:
        try:
            rels.append(relator_from_text(body, gens))
        except WordError as e:
            raise WordError(f"line {lineno}: {e}") from None
    return Presentation(tuple(gens), tuple(rels))


def artin_presentation(g: CoxeterGraph, flavor: str = "artin") -> Presentation:
    n = g.rank
    rels = []
    if flavor == "coxeter":
        rels += [(i + 1, i + 1) for i in range(n)]
    elif flavor != "artin":
        raise ValueError(f"unknown flavor {flavor!r}")
    for i in range(n):
        for j in range(i + 1, n):
            m = g.label(i, j)
            if m == INF:
                continue
            a, b = i + 1, j + 1
            if flavor == "artin":
                rels.append(mul(bracket_word(a, b, m), inverse(bracket_word(b, a, m))))
            else:
                rels.append((a, b) * m)
    return Presentation(tuple(g.vertices), tuple(rels))


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple = ()

    @property
    def trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelianize(p: Presentation) -> AbelianInvariants:
    rows = [exponent_sums(r, p.ngens) for r in p.relators]
    rows = [r for r in rows if any(r)]
    if not rows or p.ngens == 0:
        return AbelianInvariants(p.ngens, ())
    factors = [abs(int(f)) for f in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [f for f in factors if f != 0]
    return AbelianInvariants(p.ngens - len(nonzero), tuple(f for f in nonzero if f > 1))


def _solve_for(r, g: int):
    """If generator g occurs exactly once in relator r, return its value as a word."""
    pos = [k for k, x in enumerate(r) if abs(x) == g]
    if len(pos) != 1:
        return None
    k = pos[0]
    rest = r[k + 1:] + r[:k]  # g^e * rest = 1 cyclically
    return inverse(rest) if r[k] > 0 else rest


def tietze_eliminate(p: Presentation, budget: int = 10_000, protected=frozenset()) -> Presentation:
    """Eliminate generators that some relator expresses in terms of the others.

    Each step takes the shortest eligible relator, ties broken by lowest
    generator index.  Generators in ``protected`` (names) are never removed.
    Empty relators are discarded; duplicate relators are kept.
    """
    gens = list(p.generators)
    rels = [r for r in p.relators if r]
    ambient = dict(p.ambient)
    steps = 0
    while steps < budget:
        best = None
        for r in rels:
            for g in sorted({abs(x) for x in r}):
                if gens[g - 1] in protected:
                    continue
                val = _solve_for(r, g)
                if val is None:
                    continue
                key = (len(r), g)
                if best is None or key < best[0]:
                    best = (key, r, g, val)
        if best is None:
            break
        _, r0, g, val = best
        steps += 1
        images = [(k,) for k in range(1, len(gens) + 1)]
        images[g - 1] = val
        new = []
        dropped_once = False
        for r in rels:
            if r is r0 and not dropped_once:
                dropped_once = True
                continue
            out = []
            for x in r:
                img = images[abs(x) - 1]
                out.extend(img if x > 0 else inverse(img))
            nr = normalize_relator(out)
            if nr:
                new.append(nr)
        # renumber generators above g
        def shift(x):
            a = abs(x)
            a = a - 1 if a > g else a
            return a if x > 0 else -a

        rels = [tuple(shift(x) for x in r) for r in new]
        ambient.pop(gens[g - 1], None)
        del gens[g - 1]
    return Presentation(tuple(gens), tuple(rels), ambient)
