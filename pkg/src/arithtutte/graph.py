"""Labelled multigraphs with regular and dotted edges.

A labelled graph carries, for each edge, a kind (regular or dotted) and a
positive integer label. Deleting a regular edge removes it; contracting a
regular edge turns it into a dotted edge, so the vertex set never changes.

Graphs are read from and written to the AGF text format::

    # comment
    V <id>
    E <R|D> <u> <v> <label>
"""

from __future__ import annotations

import enum
from math import lcm
from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple

from .errors import GraphFormatError, NotRegularEdgeError
from .linalg import IntMatrix


class EdgeKind(str, enum.Enum):
    REGULAR = "R"
    DOTTED = "D"


class Edge(NamedTuple):
    u: str
    v: str
    kind: EdgeKind
    label: int

    @property
    def is_regular(self) -> bool:
        return self.kind is EdgeKind.REGULAR


@dataclass(frozen=True)
class LabelledGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(Edge(e[0], e[1], EdgeKind(e[2]), int(e[3])) for e in self.edges)
        )
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex identifiers must be distinct")
        known = set(self.vertices)
        for i, e in enumerate(self.edges):
            if e.u not in known or e.v not in known:
                raise ValueError(f"edge {i} references an undeclared vertex")
            if e.u == e.v:
                raise ValueError(f"edge {i} is a loop")
            if e.label < 1:
                raise ValueError(f"edge {i} has nonpositive label {e.label}")

    @property
    def regular(self) -> list[int]:
        """Indices of the regular edges, in edge order."""
        return [i for i, e in enumerate(self.edges) if e.is_regular]

    @property
    def dotted(self) -> list[int]:
        return [i for i, e in enumerate(self.edges) if not e.is_regular]

    def index(self, vertex: str) -> int:
        return self.vertices.index(vertex)


@dataclass(frozen=True)
class OrientedGraph:
    """A labelled graph with a direction (head, tail) fixed for every edge."""

    base: LabelledGraph
    directions: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "directions", tuple(tuple(d) for d in self.directions))
        if len(self.directions) != len(self.base.edges):
            raise ValueError("one direction per edge is required")
        for e, (h, t) in zip(self.base.edges, self.directions):
            if sorted((h, t)) != sorted((e.u, e.v)):
                raise ValueError(f"direction {(h, t)} does not match edge {e.u}-{e.v}")

    def flipped(self, i: int) -> OrientedGraph:
        """Same graph with edge ``i`` reversed."""
        dirs = list(self.directions)
        h, t = dirs[i]
        dirs[i] = (t, h)
        return OrientedGraph(self.base, tuple(dirs))


@dataclass(frozen=True)
class IncidenceSystem:
    x_regular: IntMatrix
    x_dotted: IntMatrix
    n: int


@dataclass(frozen=True)
class QuotientStats:
    k: int
    n_bar: int
    r_count: int
    d_count: int
    v_count: int


# ---------------------------------------------------------------------------
# AGF parsing

def parse_graph(text: str | Iterable[str]) -> LabelledGraph:
    """Parse AGF text (a string or an iterable of lines)."""
    lines = text.splitlines() if isinstance(text, str) else text
    vertices: list[str] = []
    known: set[str] = set()
    edges: list[Edge] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "V" and len(tok) == 2:
            if tok[1] in known:
                raise GraphFormatError("duplicate-vertex", lineno, f"vertex {tok[1]!r} declared twice")
            vertices.append(tok[1])
            known.add(tok[1])
        elif tok[0] == "E" and len(tok) == 5 and tok[1] in ("R", "D"):
            _, kind, u, v, label = tok
            try:
                lab = int(label)
            except ValueError:
                raise GraphFormatError("malformed-line", lineno, f"bad label {label!r}") from None
            for w in (u, v):
                if w not in known:
                    raise GraphFormatError("unknown-vertex", lineno, f"unknown vertex {w!r}")
            if u == v:
                raise GraphFormatError("loop-edge", lineno, f"loop at vertex {u!r}")
            if lab < 1:
                raise GraphFormatError("nonpositive-label", lineno, f"label {lab} is not positive")
            edges.append(Edge(u, v, EdgeKind(kind), lab))
        else:
            raise GraphFormatError("malformed-line", lineno, f"cannot parse {line!r}")
    return LabelledGraph(tuple(vertices), tuple(edges))


def read_graph(path) -> LabelledGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh)


def serialize_graph(g: LabelledGraph) -> str:
    out = [f"V {v}" for v in g.vertices]
    out += [f"E {e.kind.value} {e.u} {e.v} {e.label}" for e in g.edges]
    return "".join(s + "\n" for s in out)


# ---------------------------------------------------------------------------
# orientation and incidence vectors

def orient_default(g: LabelledGraph) -> OrientedGraph:
    """Direct each edge from its first-written endpoint (head) to the second."""
    return OrientedGraph(g, tuple((e.u, e.v) for e in g.edges))


def incidence_system(og: OrientedGraph) -> IncidenceSystem:
    """Column x_e has +label at the head row and -label at the tail row."""
    g = og.base
    n = len(g.vertices)
    pos = {v: i for i, v in enumerate(g.vertices)}
    reg, dot = [], []
    for e, (h, t) in zip(g.edges, og.directions):
        col = [0] * n
        col[pos[h]] = e.label
        col[pos[t]] = -e.label
        (reg if e.is_regular else dot).append(col)
    return IncidenceSystem(IntMatrix.from_columns(reg, n), IntMatrix.from_columns(dot, n), n)


# ---------------------------------------------------------------------------
# deletion / contraction

def _check_regular(g: LabelledGraph, i: int) -> None:
    if not 0 <= i < len(g.edges):
        raise IndexError(f"edge index {i} out of range (graph has {len(g.edges)} edges)")
    if not g.edges[i].is_regular:
        raise NotRegularEdgeError(f"edge {i} is dotted; only regular edges can be deleted or contracted")


def delete_edge(g: LabelledGraph, i: int) -> LabelledGraph:
    _check_regular(g, i)
    return replace(g, edges=g.edges[:i] + g.edges[i + 1:])


def contract_edge(g: LabelledGraph, i: int) -> LabelledGraph:
    """Turn regular edge ``i`` into a dotted edge (labels and vertices unchanged)."""
    _check_regular(g, i)
    edges = list(g.edges)
    edges[i] = edges[i]._replace(kind=EdgeKind.DOTTED)
    return replace(g, edges=tuple(edges))


# ---------------------------------------------------------------------------
# connectivity

class _DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True

    def count(self) -> int:
        return sum(1 for x in self.parent if self.find(x) == x)


def quotient_stats(g: LabelledGraph) -> QuotientStats:
    """Component count of G and vertex count of G with all dotted edges contracted."""
    all_edges = _DisjointSet(g.vertices)
    dotted_only = _DisjointSet(g.vertices)
    for e in g.edges:
        all_edges.union(e.u, e.v)
        if not e.is_regular:
            dotted_only.union(e.u, e.v)
    return QuotientStats(
        k=all_edges.count(),
        n_bar=dotted_only.count(),
        r_count=len(g.regular),
        d_count=len(g.dotted),
        v_count=len(g.vertices),
    )


def components(g: LabelledGraph) -> list[LabelledGraph]:
    """Connected components, ordered by their first vertex; edges keep their order."""
    ds = _DisjointSet(g.vertices)
    for e in g.edges:
        ds.union(e.u, e.v)
    groups: dict[str, list[str]] = {}
    for v in g.vertices:
        groups.setdefault(ds.find(v), []).append(v)
    out = []
    for verts in groups.values():
        vs = set(verts)
        out.append(LabelledGraph(tuple(verts), tuple(e for e in g.edges if e.u in vs)))
    return out


def disjoint_union(g1: LabelledGraph, g2: LabelledGraph) -> LabelledGraph:
    """Vertices and edges of ``g1`` followed by those of ``g2``.

    Vertex names are suffixed with ``.1``/``.2`` when the two graphs share a name.
    """
    if set(g1.vertices) & set(g2.vertices):
        def ren(g, tag):
            m = {v: f"{v}.{tag}" for v in g.vertices}
            return LabelledGraph(
                tuple(m[v] for v in g.vertices),
                tuple(e._replace(u=m[e.u], v=m[e.v]) for e in g.edges),
            )
        g1, g2 = ren(g1, 1), ren(g2, 2)
    return LabelledGraph(g1.vertices + g2.vertices, g1.edges + g2.edges)


def add_isolated_vertex(g: LabelledGraph, name: str | None = None) -> LabelledGraph:
    if name is None:
        i = len(g.vertices)
        while f"iso{i}" in g.vertices:
            i += 1
        name = f"iso{i}"
    return replace(g, vertices=g.vertices + (name,))


def lcm_labels(g: LabelledGraph) -> int:
    return lcm(*(e.label for e in g.edges)) if g.edges else 1
