"""Word problem for spherical Artin groups via the left-greedy Garside normal form.

Simple elements are lifts of Coxeter group elements and are handled through
their descent sets.  An element is written Delta^p x_1 ... x_r with every
pair (x_i, x_{i+1}) left-weighted: L(x_{i+1}) is contained in R(x_i).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .coxeter import CoxeterGraph, require_spherical
from .weyl import WElement, longest_element, project_to_coxeter, root_system
from .words import WordError, free_reduce, inverse, mul, substitute


@dataclass(frozen=True)
class GarsideNF:
    inf: int
    factors: tuple  # WElements, none trivial or equal to Delta

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def factor_words(self) -> list:
        """Each factor as a positive word (1-based letters)."""
        return [tuple(i + 1 for i in x.reduced_word()) for x in self.factors]

    def key(self) -> tuple:
        return (self.inf, tuple(x.key for x in self.factors))

    def __eq__(self, other):
        if not isinstance(other, GarsideNF):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_left_weighted(self) -> bool:
        return all(y.left_descents() <= x.right_descents() for x, y in zip(self.factors, self.factors[1:]))

    def to_json(self, names=None) -> dict:
        from .words import format_word

        return {"inf": self.inf, "factors": [format_word(w, names) for w in self.factor_words()]}


class _Simples:
    """Interned simple elements with memoized descent masks and products."""

    def __init__(self, system):
        self.system = system
        self.elems: list = []
        self.index: dict = {}
        self.R: list = []
        self.L: list = []
        self._rmul: dict = {}
        self._lmul: dict = {}

    def intern(self, w: WElement) -> int:
        k = self.index.get(w.key)
        if k is None:
            k = self.index[w.key] = len(self.elems)
            self.elems.append(w)
            self.R.append(sum(1 << i for i in w.right_descents()))
            self.L.append(sum(1 << i for i in w.left_descents()))
        return k

    def rmul(self, x: int, s: int) -> int:
        k = self._rmul.get((x, s))
        if k is None:
            k = self._rmul[(x, s)] = self.intern(self.elems[x].mul_gen(s))
        return k

    def lmul(self, s: int, y: int) -> int:
        k = self._lmul.get((s, y))
        if k is None:
            k = self._lmul[(s, y)] = self.intern(self.elems[y].gen_mul(s))
        return k


class _Engine:
    """Per-graph data: Delta, its reduced word and the complements s_i Delta."""

    def __init__(self, g: CoxeterGraph):
        require_spherical(g)
        self.graph = g
        self.system = root_system(g)
        self.rank = g.rank
        self.delta_elem, self.delta_word = longest_element(g)
        S = self.simples = _Simples(self.system)
        self.one = S.intern(self.system.identity())
        self.delta = S.intern(self.delta_elem)
        self.gens = [S.intern(self.system.generator(i)) for i in range(self.rank)]
        # a_i^-1 = x_i Delta^-1 with x_i = s_i w0
        self.complement = [S.intern(self.system.generator(i) * self.delta_elem) for i in range(self.rank)]
        self._tau: dict = {}

    def tau(self, y: int) -> int:
        k = self._tau.get(y)
        if k is None:
            d = self.delta_elem
            k = self._tau[y] = self.simples.intern(d * self.simples.elems[y] * d)
        return k

    def _fix_pair(self, x: int, y: int):
        """Slide letters of y's head into x until the pair is left-weighted."""
        S = self.simples
        changed = False
        while True:
            cand = S.L[y] & ~S.R[x]
            if not cand:
                return x, y, changed
            s = (cand & -cand).bit_length() - 1
            x = S.rmul(x, s)
            y = S.lmul(s, y)
            changed = True

    def _push(self, F: list, y: int):
        """Append a simple factor and restore left-weightedness leftward."""
        if y == self.one:
            return
        F.append(y)
        j = len(F) - 1
        while j > 0:
            x, y2, changed = self._fix_pair(F[j - 1], F[j])
            F[j - 1] = x
            if y2 == self.one:
                del F[j]
            else:
                F[j] = y2
            if not changed:
                break
            j -= 1

    def _sweep(self, F: list) -> bool:
        """One full pass over all pairs; True if something changed."""
        changed_any = False
        j = len(F) - 1
        while j > 0:
            if j >= len(F):
                j = len(F) - 1
                continue
            x, y, changed = self._fix_pair(F[j - 1], F[j])
            F[j - 1] = x
            if y == self.one:
                del F[j]
            else:
                F[j] = y
            changed_any |= changed
            j -= 1
        return changed_any

    def normal_form(self, w) -> GarsideNF:
        p = 0
        parity = 0  # actual factors are tau^parity of the stored ones
        F: list = []
        for x in w:
            i = abs(x) - 1
            if x == 0 or i >= self.rank:
                raise WordError(f"letter {x} out of range for rank {self.rank}")
            y = self.gens[i] if x > 0 else self.complement[i]
            self._push(F, self.tau(y) if parity else y)
            if x < 0:
                p -= 1
                parity ^= 1
        while self._sweep(F):
            pass
        out = [self.tau(y) if parity else y for y in F]
        k = 0
        while k < len(out) and out[k] == self.delta:
            k += 1
        p += k
        elems = self.simples.elems
        return GarsideNF(p, tuple(elems[y] for y in out[k:] if y != self.one))

    def positive_word(self, nf: GarsideNF) -> tuple:
        """Positive word of Delta^inf x_1..x_r (requires inf >= 0)."""
        if nf.inf < 0:
            raise ValueError("negative infimum has no positive word")
        out = list(self.delta_word) * nf.inf
        for w in nf.factor_words():
            out.extend(w)
        return tuple(out)

    def word(self, nf: GarsideNF) -> tuple:
        """A word (possibly with inverse letters) representing the normal form."""
        d = self.delta_word if nf.inf >= 0 else inverse(self.delta_word)
        out = list(d) * abs(nf.inf)
        for w in nf.factor_words():
            out.extend(w)
        return free_reduce(out)


_ENGINES: dict = {}


def engine(g: CoxeterGraph) -> _Engine:
    e = _ENGINES.get(g)
    if e is None:
        e = _ENGINES[g] = _Engine(g)
    return e


def normal_form(w, g: CoxeterGraph) -> GarsideNF:
    return engine(g).normal_form(w)


def word_equal(u, v, g: CoxeterGraph) -> bool:
    return normal_form(mul(u, inverse(v)), g).is_identity()


def is_identity(w, g: CoxeterGraph) -> bool:
    return normal_form(w, g).is_identity()


def delta_word(g: CoxeterGraph) -> tuple:
    return engine(g).delta_word


def garside_decompose(u, g: CoxeterGraph):
    """Positive words (U1, U2) with u = U1 U2^-1 and U2 = Delta^(2t) central."""
    e = engine(g)
    nf = e.normal_form(u)
    t = math.ceil(max(0, -nf.inf) / 2)
    U2 = tuple(e.delta_word) * (2 * t)
    U1 = e.positive_word(GarsideNF(nf.inf + 2 * t, nf.factors))
    return U1, U2


# -- type A cross-check: the braid action on a free group ------------------

def _braid_images(i: int, sign: int, n: int) -> list:
    """Images of x_1..x_{n+1} under the action of a_i^sign (1-based i)."""
    imgs = [(j,) for j in range(1, n + 2)]
    if sign > 0:
        imgs[i - 1] = (i, i + 1, -i)
        imgs[i] = (i,)
    else:
        imgs[i - 1] = (i + 1,)
        imgs[i] = (-(i + 1), i, i + 1)
    return imgs


def artin_action(w, n: int) -> list:
    """Images of the free basis x_1..x_{n+1} under the automorphism of ``w``."""
    imgs = [(j,) for j in range(1, n + 2)]
    for x in w:
        i = abs(x)
        if x == 0 or i > n:
            raise ValueError(f"letter {x} out of range for A{n}")
        step = _braid_images(i, 1 if x > 0 else -1, n)
        imgs = [substitute(s, imgs) for s in step]
    return imgs


def artin_action_equal(u, v, n: int) -> bool:
    return artin_action(u, n) == artin_action(v, n)


def crisp_embed_B(w, n: int) -> tuple:
    """B_n -> A_n: b_i -> a_i for i < n and b_n -> a_n^2."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    out = []
    for x in w:
        i = abs(x)
        if x == 0 or i > n:
            raise ValueError(f"letter {x} out of range for B{n}")
        out.extend([x, x] if i == n else [x])
    return free_reduce(out)


def commutes_with_generators(w, g: CoxeterGraph) -> bool:
    return all(word_equal(mul(w, (i,)), mul((i,), w), g) for i in range(1, g.rank + 1))


def nu_image(w, g: CoxeterGraph) -> WElement:
    return project_to_coxeter(w, g)
