"""Parametrized relator families for the commutator subgroups.

Letters are generator names such as ``p-1``, ``q3``, ``r2``; a relator is a
tuple of ``(name, sign)`` pairs.  Integer parameters range over Z unless a
range depending on the rank n is given.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable


def P(k):
    return f"p{k}"


def Q(i):
    return f"q{i}"


def R(l):
    return f"r{l}"


def rel(*letters) -> tuple:
    """Build a relator from names, with a trailing ``'`` meaning inverse."""
    out = []
    for x in letters:
        if x.endswith("'"):
            out.append((x[:-1], -1))
        else:
            out.append((x, 1))
    return tuple(out)


def eq(lhs, rhs) -> tuple:
    """Relator lhs * rhs^-1 from two tuples of names."""
    return rel(*lhs, *[x[:-1] if x.endswith("'") else x + "'" for x in reversed(rhs)])


@dataclass(frozen=True)
class RelatorFamily:
    name: str
    params: tuple  # parameter names, in template order
    ranges: Callable  # n -> {param: (lo, hi) or None for Z}
    template: Callable  # (n, **params) -> relator
    indexed: frozenset = frozenset({"p", "r"})  # prefixes whose index must lie in the window
    min_rank: int = 2
    note: str = ""

    def instances(self, n: int, N: int) -> list:
        """Instances whose indexed generators all lie in [-N, N]."""
        if n < self.min_rank:
            return []
        rng = self.ranges(n)
        spans = []
        for p in self.params:
            r = rng.get(p)
            if r is None:
                spans.append(range(-N - 6, N + 7))
            else:
                spans.append(range(r[0], r[1] + 1))
        out = []
        for vals in itertools.product(*spans):
            kw = dict(zip(self.params, vals))
            r = self.template(n, **kw)
            if r is None:
                continue
            if all(_in_window(name, self.indexed, N) for name, _ in r):
                out.append(r)
        return out


_NAME = re.compile(r"([a-z]+)(-?\d+)")


def _in_window(name, indexed, N) -> bool:
    mt = _NAME.fullmatch(name)
    if not mt or mt.group(1) not in indexed:
        return True
    return -N <= int(mt.group(2)) <= N


def _cond(ok, r):
    return r if ok else None


LIBRARY: dict = {}


def _add(f: RelatorFamily):
    LIBRARY[f.name] = f


# type A_n, n >= 2
_add(RelatorFamily(
    "A:p-rec", ("k",), lambda n: {}, lambda n, k: rel(P(k + 1), P(k + 2) + "'", P(k) + "'")))
_add(RelatorFamily(
    "A:p-q3", ("k",), lambda n: {},
    lambda n, k: rel(P(k), Q(3), P(k + 2), Q(3) + "'", P(k + 1) + "'", Q(3) + "'"), min_rank=3))
_add(RelatorFamily(
    "A:q-braid", ("i",), lambda n: {"i": (3, n - 1)},
    lambda n, i: rel(Q(i), Q(i + 1), Q(i), Q(i + 1) + "'", Q(i) + "'", Q(i + 1) + "'")))
_add(RelatorFamily(
    "A:p-q-shift", ("k", "j"), lambda n: {"j": (4, n)},
    lambda n, k, j: rel(P(k), Q(j), P(k + 1) + "'", Q(j) + "'")))
_add(RelatorFamily(
    "A:q-commute", ("i", "j"), lambda n: {"i": (3, n), "j": (3, n)},
    lambda n, i, j: _cond(j - i >= 2, rel(Q(i), Q(j), Q(i) + "'", Q(j) + "'"))))

TYPE_A_FAMILIES = ("A:p-rec", "A:p-q3", "A:q-braid", "A:p-q-shift", "A:q-commute")

# type B_n, n >= 5
_add(RelatorFamily(
    "B:p-q-shift", ("k", "j"), lambda n: {"j": (4, n - 2)},
    lambda n, k, j: eq((P(k), Q(j)), (Q(j), P(k + 1))), min_rank=5))
_add(RelatorFamily(
    "B:p-r-shift", ("k", "l"), lambda n: {},
    lambda n, k, l: eq((P(k), R(l)), (R(l), P(k + 1))), min_rank=5))
_add(RelatorFamily(
    "B:q-commute", ("i", "j"), lambda n: {"i": (3, n - 2), "j": (3, n - 2)},
    lambda n, i, j: _cond(j - i >= 2, eq((Q(i), Q(j)), (Q(j), Q(i)))), min_rank=5))
_add(RelatorFamily(
    "B:q-r-commute", ("i", "l"), lambda n: {"i": (3, n - 3)},
    lambda n, i, l: eq((Q(i), R(l)), (R(l), Q(i))), min_rank=5))
_add(RelatorFamily(
    "B:p-rec", ("k",), lambda n: {}, lambda n, k: rel(P(k + 1), P(k + 2) + "'", P(k) + "'"), min_rank=5))
_add(RelatorFamily(
    "B:p-q3", ("k",), lambda n: {},
    lambda n, k: rel(P(k), Q(3), P(k + 2), Q(3) + "'", P(k + 1) + "'", Q(3) + "'"), min_rank=5))
_add(RelatorFamily(
    "B:q-braid", ("i",), lambda n: {"i": (3, n - 3)},
    lambda n, i: eq((Q(i), Q(i + 1), Q(i)), (Q(i + 1), Q(i), Q(i + 1))), min_rank=5))
_add(RelatorFamily(
    "B:q-r-braid", ("l",), lambda n: {},
    lambda n, l: eq((Q(n - 2), R(l), Q(n - 2)), (R(l), Q(n - 2), R(l))), min_rank=5))
_add(RelatorFamily(
    "B:r-rec", ("l",), lambda n: {}, lambda n, l: rel(R(l), R(l + 1), R(l + 2) + "'", R(l + 1) + "'"), min_rank=5))

TYPE_B_FAMILIES = ("B:p-q-shift", "B:p-r-shift", "B:q-commute", "B:q-r-commute", "B:p-rec",
                   "B:p-q3", "B:q-braid", "B:q-r-braid", "B:r-rec")

# type B_4: here q_l is indexed by Z
_B4 = frozenset({"p", "q"})
_add(RelatorFamily(
    "B4:p-rec", ("k",), lambda n: {}, lambda n, k: rel(P(k + 1), P(k + 2) + "'", P(k) + "'"),
    indexed=_B4, min_rank=4))
_add(RelatorFamily(
    "B4:p-q", ("k", "l"), lambda n: {},
    lambda n, k, l: eq((P(k), Q(l), P(k + 2)), (Q(l), P(k + 1), Q(l))), indexed=_B4, min_rank=4))
_add(RelatorFamily(
    "B4:q-rec", ("l",), lambda n: {},
    lambda n, l: eq((Q(l), Q(l + 1)), (Q(l + 1), Q(l + 2))), indexed=_B4, min_rank=4,
    note="adjudicated reading: l ranges over Z"))
_add(RelatorFamily(
    "B4:q-rec-verbatim", ("l", "i"), lambda n: {"i": (3, n - 3)},
    lambda n, l, i: eq((Q(l), Q(l + 1)), (Q(l + 1), Q(l + 2))), indexed=_B4, min_rank=4,
    note="literal range (3 <= i <= n-3), empty for n = 4"))

TYPE_B4_FAMILIES = ("B4:p-rec", "B4:p-q", "B4:q-rec")

# type F_4
_F4 = frozenset({"p", "q"})
_add(RelatorFamily(
    "F:p-rec", ("k",), lambda n: {}, lambda n, k: eq((P(k),), (P(k + 1), P(k + 2) + "'")), indexed=_F4, min_rank=4))
_add(RelatorFamily(
    "F:q-rec", ("l",), lambda n: {}, lambda n, l: eq((Q(l),), (Q(l + 1), Q(l + 2) + "'")), indexed=_F4, min_rank=4))
_add(RelatorFamily(
    "F:p-q", ("k", "l"), lambda n: {},
    lambda n, k, l: eq((P(k), Q(l), P(k + 1), Q(l + 1)), (Q(l), P(k), Q(l + 1), P(k + 1))),
    indexed=_F4, min_rank=4))

TYPE_F_FAMILIES = ("F:p-rec", "F:q-rec", "F:p-q")

# type H_n, n = 3, 4
_add(RelatorFamily(
    "H:p-q-shift", ("k", "j"), lambda n: {"j": (4, n)},
    lambda n, k, j: eq((P(k), Q(j)), (Q(j), P(k + 1))), min_rank=3))
_add(RelatorFamily(
    "H:p-rec", ("k",), lambda n: {},
    lambda n, k: rel(P(k + 1), P(k + 3), P(k + 4) + "'", P(k + 2) + "'", P(k) + "'"), min_rank=3))
_add(RelatorFamily(
    "H:p-q3", ("k",), lambda n: {},
    lambda n, k: rel(P(k), Q(3), P(k + 2), Q(3) + "'", P(k + 1) + "'", Q(3) + "'"), min_rank=3))
_add(RelatorFamily(
    "H:q-braid", ("i",), lambda n: {"i": (3, n - 1)},
    lambda n, i: eq((Q(i), Q(i + 1), Q(i)), (Q(i + 1), Q(i), Q(i + 1))), min_rank=3))

TYPE_H_FAMILIES = ("H:p-q-shift", "H:p-rec", "H:p-q3", "H:q-braid")


class UnknownFamily(KeyError):
    pass


def get_family(name: str) -> RelatorFamily:
    try:
        return LIBRARY[name]
    except KeyError:
        raise UnknownFamily(name) from None


def instantiate_family(name: str, n: int, N: int) -> list:
    """Concrete relators of a family over the window [-N, N] (empty window if N < 0)."""
    f = get_family(name)
    if N < 0:
        return []
    return f.instances(n, N)


def expected_window(family: str, n: int, N: int) -> list:
    """All relators of the families describing the window for a type."""
    names = {"A": TYPE_A_FAMILIES, "B": TYPE_B_FAMILIES, "B4": TYPE_B4_FAMILIES,
             "F": TYPE_F_FAMILIES, "H": TYPE_H_FAMILIES}[family]
    out = []
    for nm in names:
        out.extend(instantiate_family(nm, n, N))
    return out
