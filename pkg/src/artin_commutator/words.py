"""Free-group words as tuples of nonzero ints.

Letter ``+i`` is generator i (1-based), ``-i`` its inverse.  Every function
returns freely reduced tuples.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

Word = tuple


class WordError(ValueError):
    pass


def free_reduce(letters: Iterable[int]) -> Word:
    out: list = []
    for x in letters:
        if x == 0:
            raise WordError("letter 0 is not allowed")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def mul(*words: Sequence[int]) -> Word:
    return free_reduce(x for w in words for x in w)


def power(w: Sequence[int], e: int) -> Word:
    if e < 0:
        w, e = inverse(w), -e
    return free_reduce(tuple(w) * e)


def conj(w: Sequence[int], by: Sequence[int]) -> Word:
    """``by * w * by^-1``."""
    return mul(by, w, inverse(by))


def commutator(g: Sequence[int], h: Sequence[int]) -> Word:
    """[g, h] = g h g^-1 h^-1."""
    return mul(g, h, inverse(g), inverse(h))


def bracket_word(a: int, b: int, q: int) -> Word:
    """The alternating product a b a ... with q factors."""
    if q < 0:
        raise WordError("q must be nonnegative")
    return tuple(a if k % 2 == 0 else b for k in range(q))


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def _key(w):
    return [(abs(x), x < 0) for x in w]


def normalize_relator(w: Sequence[int]) -> Word:
    """Least rotation of the cyclic reduction of w or w^-1."""
    c = cyclic_reduce(w)
    if not c:
        return ()
    best = None
    best_key = None
    for cand in (c, inverse(c)):
        for r in range(len(cand)):
            rot = cand[r:] + cand[:r]
            k = _key(rot)
            if best_key is None or k < best_key:
                best, best_key = rot, k
    return best


def exponent_sums(w: Sequence[int], ngens: int) -> list:
    v = [0] * ngens
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def substitute(w: Sequence[int], images) -> Word:
    """Apply the endomorphism sending generator i to ``images[i - 1]``."""
    out: list = []
    for x in w:
        img = images[abs(x) - 1]
        out.extend(img if x > 0 else inverse(img))
    return free_reduce(out)


_TOKEN = re.compile(r"^(?P<name>[^\s^]+?)(?:\^(?P<exp>[+-]?\d+))?$")


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse whitespace separated ``name`` or ``name^k`` tokens; ``1`` is the empty word."""
    index = {n: i + 1 for i, n in enumerate(names)}
    out: list = []
    for tok in text.split():
        if tok == "1":
            continue
        mt = _TOKEN.match(tok)
        if not mt:
            raise WordError(f"bad token {tok!r}")
        name, exp = mt.group("name"), mt.group("exp")
        if name not in index:
            raise WordError(f"unknown generator {name!r}")
        e = int(exp) if exp is not None else 1
        g = index[name]
        out.extend([g if e > 0 else -g] * abs(e))
    return free_reduce(out)


def format_word(w: Sequence[int], names: Sequence[str] | None = None) -> str:
    """Inverse of parse_word, with runs of a letter collapsed into powers."""
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        x, e = w[i], (j - i) * (1 if w[i] > 0 else -1)
        name = names[abs(x) - 1] if names is not None else f"a{abs(x)}"
        parts.append(name if e == 1 else f"{name}^{e}")
        i = j
    return " ".join(parts)
