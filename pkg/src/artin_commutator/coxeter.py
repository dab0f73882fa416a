"""Coxeter matrices and graphs, the spherical catalogue, and odd components."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import networkx as nx

INF = math.inf


class GraphError(ValueError):
    pass


class NotSphericalError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of labels; ``entries[i][j]`` is an int >= 2 or ``INF`` off the diagonal."""

    entries: tuple

    def __post_init__(self):
        n = len(self.entries)
        for i in range(n):
            if len(self.entries[i]) != n:
                raise GraphError("Coxeter matrix must be square")
            if self.entries[i][i] != 1:
                raise GraphError(f"diagonal entry ({i},{i}) must be 1")
            for j in range(n):
                if i == j:
                    continue
                m = self.entries[i][j]
                if m != self.entries[j][i]:
                    raise GraphError(f"entries ({i},{j}) and ({j},{i}) differ")
                if not (m == INF or (isinstance(m, int) and m >= 2)):
                    raise GraphError(f"bad label {m!r} at ({i},{j})")

    @property
    def size(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SphericalType:
    family: str
    rank: int
    m: int | None = None  # dihedral label, I2 only

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> SphericalType:
        text = text.strip()
        mt = re.fullmatch(r"I2?\((\d+)\)", text)
        if mt:
            t = cls("I2", 2, int(mt.group(1)))
        else:
            mt = re.fullmatch(r"([ABDEFH])(\d+)", text)
            if not mt:
                raise GraphError(f"cannot parse type {text!r}")
            t = cls(mt.group(1), int(mt.group(2)))
        t.validate()
        return t

    def validate(self):
        lo = {"A": 1, "B": 2, "D": 4}
        ok = {
            "E": lambda n: n in (6, 7, 8),
            "F": lambda n: n == 4,
            "H": lambda n: n in (3, 4),
            "I2": lambda n: n == 2 and self.m is not None and self.m >= 5,
        }
        if self.family in lo:
            valid = self.rank >= lo[self.family]
        elif self.family in ok:
            valid = ok[self.family](self.rank)
        else:
            valid = False
        if not valid:
            raise GraphError(f"{self} is not in the spherical catalogue")


@dataclass(frozen=True)
class CoxeterGraph:
    """Labelled graph; absent edges carry label 2."""

    vertices: tuple
    edges: frozenset = field(default_factory=frozenset)  # of (i, j, label), i < j

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise GraphError("duplicate vertex names")
        seen = set()
        for i, j, m in self.edges:
            if not (0 <= i < j < n):
                raise GraphError(f"bad edge ({i}, {j})")
            if (i, j) in seen:
                raise GraphError(f"duplicate edge {self.vertices[i]} {self.vertices[j]}")
            seen.add((i, j))
            if not (m == INF or (isinstance(m, int) and m >= 3)):
                raise GraphError(f"edge label must be >= 3 or inf, got {m!r}")

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def label(self, i: int, j: int):
        """Coxeter label between 0-based vertices ``i`` and ``j``."""
        if i == j:
            return 1
        a, b = min(i, j), max(i, j)
        for x, y, m in self.edges:
            if (x, y) == (a, b):
                return m
        return 2

    def matrix(self) -> CoxeterMatrix:
        n = self.rank
        rows = [[2] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
        for i, j, m in self.edges:
            rows[i][j] = rows[j][i] = m
        return CoxeterMatrix(tuple(tuple(r) for r in rows))

    @classmethod
    def from_matrix(cls, mat: CoxeterMatrix, names=None) -> CoxeterGraph:
        n = mat.size
        names = tuple(names) if names is not None else tuple(f"a{i + 1}" for i in range(n))
        edges = frozenset(
            (i, j, mat.entries[i][j])
            for i in range(n)
            for j in range(i + 1, n)
            if mat.entries[i][j] != 2
        )
        return cls(names, edges)

    def index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise GraphError(f"unknown vertex {name!r}") from None

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.rank))
        for i, j, m in self.edges:
            g.add_edge(i, j, label=m)
        return g

    def is_connected(self) -> bool:
        return self.rank > 0 and nx.is_connected(self.to_networkx())


def _build(n: int, edges) -> CoxeterGraph:
    return CoxeterGraph(
        tuple(f"a{i + 1}" for i in range(n)),
        frozenset((min(i, j) - 1, max(i, j) - 1, m) for i, j, m in edges),
    )


def catalogue_graph(t: SphericalType | str) -> CoxeterGraph:
    """The connected spherical graph of the given type, vertices a1..an.

    E-type numbering: a1..a_{n-1} form a path and a_n hangs off a3.
    """
    if isinstance(t, str):
        t = SphericalType.parse(t)
    t.validate()
    n, fam = t.rank, t.family
    path = [(i, i + 1, 3) for i in range(1, n)]
    if fam == "A":
        edges = path
    elif fam == "B":
        edges = path[:-1] + [(n - 1, n, 4)]
    elif fam == "D":
        edges = path[:-1] + [(n - 2, n, 3)]
    elif fam == "E":
        edges = path[:-1] + [(3, n, 3)]
    elif fam == "F":
        edges = [(1, 2, 3), (2, 3, 4), (3, 4, 3)]
    elif fam == "H":
        edges = [(1, 2, 5)] + path[1:]
    else:
        edges = [(1, 2, t.m)]
    return _build(n, edges)


def catalogue_types(max_rank: int = 8, dihedral=range(5, 13)):
    """Every catalogue type with rank <= max_rank plus the listed I2(m)."""
    out = [SphericalType("A", n) for n in range(1, max_rank + 1)]
    out += [SphericalType("B", n) for n in range(2, max_rank + 1)]
    out += [SphericalType("D", n) for n in range(4, max_rank + 1)]
    out += [SphericalType("E", n) for n in (6, 7, 8) if n <= max_rank]
    if max_rank >= 4:
        out.append(SphericalType("F", 4))
    out += [SphericalType("H", n) for n in (3, 4) if n <= max_rank]
    out += [SphericalType("I2", 2, m) for m in dihedral]
    return out


def _candidates(g: CoxeterGraph):
    n = g.rank
    if n == 2:
        m = g.label(0, 1)
        if m == 3:
            return [SphericalType("A", 2)]
        if m == 4:
            return [SphericalType("B", 2)]
        if isinstance(m, int) and m >= 5:
            return [SphericalType("I2", 2, m)]
        return []
    out = [SphericalType("A", n)]
    if n >= 2:
        out.append(SphericalType("B", n))
    if n >= 4:
        out.append(SphericalType("D", n))
    if n in (6, 7, 8):
        out.append(SphericalType("E", n))
    if n == 4:
        out.append(SphericalType("F", 4))
    if n in (3, 4):
        out.append(SphericalType("H", n))
    return out


def classify(g: CoxeterGraph) -> SphericalType | None:
    """Return the catalogue type isomorphic to ``g`` or None if ``g`` is not spherical."""
    if not g.is_connected():
        raise DisconnectedGraphError("classify expects a connected graph")
    if len(g.edges) != g.rank - 1:
        return None  # every catalogue graph is a tree
    gx = g.to_networkx()
    match = nx.algorithms.isomorphism.categorical_edge_match("label", None)
    for t in _candidates(g):
        if nx.is_isomorphic(gx, catalogue_graph(t).to_networkx(), edge_match=match):
            return t
    return None


def require_spherical(g: CoxeterGraph) -> SphericalType:
    t = classify(g)
    if t is None:
        raise NotSphericalError("graph is not of spherical type")
    return t


def odd_components(g: CoxeterGraph) -> list:
    """Components of the graph keeping only odd finite labels, ordered by least vertex."""
    h = nx.Graph()
    h.add_nodes_from(range(g.rank))
    h.add_edges_from((i, j) for i, j, m in g.edges if m != INF and m % 2 == 1)
    comps = [sorted(c) for c in nx.connected_components(h)]
    comps.sort(key=lambda c: c[0])
    return comps


def parse_graph(text: str) -> CoxeterGraph:
    """Parse the line-based graph format (``vertices:``, ``edge:``, ``type:``)."""
    vertices: list = []
    raw_edges = []
    type_graph = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise GraphError(f"line {lineno}: expected 'key: value'")
        key, parts = key.strip(), rest.split()
        if key == "type":
            if len(parts) != 1:
                raise GraphError(f"line {lineno}: type takes one argument")
            type_graph = catalogue_graph(SphericalType.parse(parts[0]))
        elif key == "vertices":
            for p in parts:
                if p in vertices:
                    raise GraphError(f"line {lineno}: duplicate vertex {p}")
                vertices.append(p)
        elif key == "edge":
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: edge needs two vertices and a label")
            raw_edges.append((lineno, *parts))
        else:
            raise GraphError(f"line {lineno}: unknown key {key!r}")
    if type_graph is not None:
        if vertices or raw_edges:
            raise GraphError("type: shorthand cannot be mixed with vertices/edges")
        return type_graph
    edges = {}
    for lineno, u, v, lab in raw_edges:
        if u not in vertices or v not in vertices:
            bad = u if u not in vertices else v
            raise GraphError(f"line {lineno}: unknown vertex {bad!r}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop on {u}")
        if lab.lower() in ("inf", "oo", "infinity"):
            m = INF
        else:
            try:
                m = int(lab)
            except ValueError:
                raise GraphError(f"line {lineno}: bad label {lab!r}") from None
            if m < 3:
                raise GraphError(f"line {lineno}: explicit edge label must be >= 3")
        i, j = sorted((vertices.index(u), vertices.index(v)))
        if (i, j) in edges:
            raise GraphError(f"line {lineno}: duplicate edge {u} {v}")
        edges[(i, j)] = m
    return CoxeterGraph(tuple(vertices), frozenset((i, j, m) for (i, j), m in edges.items()))


def format_graph(g: CoxeterGraph) -> str:
    lines = ["vertices: " + " ".join(g.vertices)]
    for i, j, m in sorted(g.edges, key=lambda e: (e[0], e[1])):
        lab = "inf" if m == INF else str(m)
        lines.append(f"edge: {g.vertices[i]} {g.vertices[j]} {lab}")
    return "\n".join(lines) + "\n"
