"""Finite Coxeter groups acting on their root systems.

Every element is stored as the permutation it induces on the roots.
Root indices ``0..N-1`` are the positive roots, ``N..2N-1`` their negatives
(``r + N``), so signs, lengths and descents are read off the permutation.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .coxeter import CoxeterGraph, NotSphericalError, SphericalType, catalogue_graph, classify
from .golden import PHI, Golden


class RingMismatchError(ValueError):
    pass


def _cartan(g: CoxeterGraph, t: SphericalType):
    """Cartan-type coefficients ``A[i][j]`` with s_i(alpha_j) = alpha_j - A[i][j] alpha_i."""
    n = g.rank
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2
    golden = t.family == "H"
    for i, j, m in g.edges:
        if m == 3:
            A[i][j] = A[j][i] = -1
        elif m == 4:
            # long root on the lower index; any orientation gives the same group
            A[i][j], A[j][i] = -1, -2
        elif m == 5 and golden:
            A[i][j] = A[j][i] = -PHI
        else:
            raise NotSphericalError(f"no integral/golden root datum for label {m}")
    return A


def _is_positive(v) -> bool:
    nz = [c for c in v if c != 0]
    first = nz[0]
    sgn = first.sign() if isinstance(first, Golden) else (1 if first > 0 else -1)
    return sgn > 0


class RootSystem:
    """Roots and simple reflections for one spherical graph."""

    def __init__(self, g: CoxeterGraph):
        t = classify(g)
        if t is None:
            raise NotSphericalError("graph is not of spherical type")
        self.graph = g
        self.type = t
        self.ring = "golden" if t.family == "H" else ("dihedral" if t.family == "I2" else "integer")
        if self.ring == "dihedral":
            self._init_dihedral(t.m)
        else:
            self._init_orbit(_cartan(g, t))
        N = self.n_positive
        perms = np.asarray(self._gen_perms, dtype=np.int32)
        self.gen_perms = [p for p in perms]
        self.identity_perm = np.arange(2 * N, dtype=np.int32)

    def _init_dihedral(self, m: int):
        # Root j is the unit vector at angle j*pi/m; j < m positive, j + m its negative.
        # The reflection through the line orthogonal to root a sends j to 2a + m - j (mod 2m).
        g = self.graph
        a1, a2 = 0, m - 1
        # vertex order: a reflection for each graph vertex
        self.n_positive = m
        self.simple = [a1, a2]
        self.coords = None
        self._gen_perms = [[(2 * a + m - j) % (2 * m) for j in range(2 * m)] for a in (a1, a2)]
        self.rank = g.rank

    def _init_orbit(self, A):
        n = len(A)
        self.rank = n

        def reflect(i, v):
            v = list(v)
            v[i] = v[i] - sum((A[i][j] * v[j] for j in range(n) if A[i][j] != 0 and v[j] != 0), 0)
            return tuple(v)

        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        found = list(simple)
        seen = set(found)
        frontier = list(simple)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(n):
                    w = reflect(i, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
                        found.append(w)
            frontier = nxt
        pos = [v for v in found if _is_positive(v)]
        # keep simple roots first, the rest by height then lexicographically
        rest = sorted((v for v in pos if v not in simple), key=lambda v: (float(sum(v, 0)), [float(c) for c in v]))
        pos = simple + rest
        N = len(pos)
        coords = pos + [tuple(-c for c in v) for v in pos]
        index = {v: k for k, v in enumerate(coords)}
        self.n_positive = N
        self.simple = list(range(n))
        self.coords = coords
        self._gen_perms = [[index[reflect(i, v)] for v in coords] for i in range(n)]

    def identity(self) -> WElement:
        return WElement(self, self.identity_perm)

    def generator(self, i: int) -> WElement:
        """Simple reflection for 0-based vertex ``i``."""
        return WElement(self, self.gen_perms[i])

    def neg(self, r: int) -> int:
        N = self.n_positive
        return r + N if r < N else r - N


@lru_cache(maxsize=None)
def root_system(g: CoxeterGraph) -> RootSystem:
    return RootSystem(g)


class WElement:
    """An element of the finite Coxeter group, as a permutation of roots."""

    __slots__ = ("system", "perm", "_inv", "_key")

    def __init__(self, system: RootSystem, perm):
        self.system = system
        self.perm = perm
        self._inv = None
        self._key = None

    def _check(self, other: WElement):
        if other.system is not self.system:
            if other.system.ring != self.system.ring:
                raise RingMismatchError(f"cannot mix {self.system.ring} and {other.system.ring} elements")
            raise RingMismatchError("elements belong to different Coxeter groups")

    def __mul__(self, other: WElement) -> WElement:
        self._check(other)
        return WElement(self.system, self.perm[other.perm])

    def mul_gen(self, i: int) -> WElement:
        """Right multiplication by the simple reflection ``s_i``."""
        return WElement(self.system, self.perm[self.system.gen_perms[i]])

    def gen_mul(self, i: int) -> WElement:
        """Left multiplication by the simple reflection ``s_i``."""
        return WElement(self.system, self.system.gen_perms[i][self.perm])

    def inverse(self) -> WElement:
        if self._inv is None:
            inv = np.empty_like(self.perm)
            inv[self.perm] = np.arange(len(self.perm), dtype=self.perm.dtype)
            self._inv = inv
        return WElement(self.system, self._inv)

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = self.perm.tobytes()
        return self._key

    def __eq__(self, other):
        if not isinstance(other, WElement):
            return NotImplemented
        self._check(other)
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def length(self) -> int:
        N = self.system.n_positive
        return int(np.count_nonzero(self.perm[:N] >= N))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.perm, self.system.identity_perm))

    def has_right_descent(self, i: int) -> bool:
        return bool(self.perm[self.system.simple[i]] >= self.system.n_positive)

    def has_left_descent(self, i: int) -> bool:
        if self._inv is None:
            self.inverse()
        return bool(self._inv[self.system.simple[i]] >= self.system.n_positive)

    def right_descents(self) -> frozenset:
        return frozenset(i for i in range(self.system.rank) if self.has_right_descent(i))

    def left_descents(self) -> frozenset:
        return frozenset(i for i in range(self.system.rank) if self.has_left_descent(i))

    def reduced_word(self) -> list:
        """Lexicographically first reduced word, as 0-based generator indices."""
        out = []
        w = self
        while not w.is_identity():
            i = min(w.left_descents())
            out.append(i)
            w = w.gen_mul(i)
        return out

    def matrix(self):
        """Columns are the images of the simple roots in simple-root coordinates."""
        sys_ = self.system
        if sys_.coords is None:
            raise ValueError("dihedral elements have no coordinate matrix; use rotation_flip()")
        cols = [sys_.coords[self.perm[s]] for s in sys_.simple]
        n = sys_.rank
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def rotation_flip(self):
        """For I2(m): ``(r, f)`` meaning rotation by 2*pi*r/m after ``s1`` iff ``f``."""
        sys_ = self.system
        if sys_.ring != "dihedral":
            raise ValueError("rotation_flip is only defined for I2(m)")
        m = sys_.n_positive
        img0, img1 = int(self.perm[0]), int(self.perm[1])
        # rotations shift root indices by 2r; s1 sends j to m - j
        if (img1 - img0) % (2 * m) == 1:
            return img0 // 2, 0
        return ((img0 - m) % (2 * m)) // 2, 1

    def __repr__(self):
        word = "".join(f"s{i + 1}" for i in self.reduced_word()) or "1"
        return f"WElement({word})"


def w_product(u: WElement, v: WElement) -> WElement:
    return u * v


def longest_element(g: CoxeterGraph):
    """The longest element (greedy ascent) together with a reduced word (1-based letters)."""
    sys_ = root_system(g)
    w = sys_.identity()
    word = []
    while True:
        for i in range(sys_.rank):
            if not w.has_right_descent(i):
                w = w.mul_gen(i)
                word.append(i + 1)
                break
        else:
            return w, tuple(word)


def project_to_coxeter(word, g: CoxeterGraph) -> WElement:
    """Image of an Artin word under the natural map to the Coxeter group."""
    sys_ = root_system(g)
    w = sys_.identity()
    for x in word:
        i = abs(x) - 1
        if x == 0 or i >= sys_.rank:
            raise ValueError(f"letter {x} out of range for rank {sys_.rank}")
        w = w.mul_gen(i)
    return w


def type_a_permutation(w: WElement) -> tuple:
    """For type A_n: the permutation of {1..n+1} that ``w`` induces (one-line notation)."""
    sys_ = w.system
    if sys_.type.family != "A":
        raise ValueError("only defined for type A")
    n = sys_.rank
    # alpha_i = e_i - e_{i+1}; the root with support [i, j) is e_i - e_j.
    index = {}
    for k, v in enumerate(sys_.coords):
        supp = [t for t in range(n) if v[t] != 0]
        lo, hi = supp[0], supp[-1] + 1
        index[k] = (lo, hi) if v[lo] > 0 else (hi, lo)
    sigma = [None] * (n + 1)
    # w(e_i - e_{i+1}) = e_sigma(i) - e_sigma(i+1)
    for i in range(n):
        a, b = index[int(w.perm[i])]
        if sigma[i] is None:
            sigma[i] = a
        sigma[i + 1] = b
    return tuple(x + 1 for x in sigma)


def catalogue_system(t) -> RootSystem:
    return root_system(catalogue_graph(t))
