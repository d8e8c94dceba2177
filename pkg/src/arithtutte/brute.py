"""Exhaustive counting of arithmetic colorings and flows.

These are the reference oracles. They work straight from the definitions and
deliberately use nothing from the linear-algebra, matroid or Tutte modules.

A q-coloring assigns c(v) in Z/q to every vertex with
    label * c(u) != label * c(v)   on regular edges,
    label * c(u) == label * c(v)   on dotted edges.
A q-flow assigns w(e) in Z/q to every oriented edge so that at every vertex
    sum_{head = v} label * w(e) - sum_{tail = v} label * w(e) == 0,
with w(e) != 0 on regular edges.
"""

from __future__ import annotations

from typing import Iterator

from .errors import CapExceededError
from .graph import LabelledGraph, OrientedGraph, orient_default

DEFAULT_ENUM_CAP = 10**8


def _guard(q: int, n: int, what: str, cap: int) -> None:
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")
    if q**n > cap:
        raise CapExceededError(what, q**n, cap)


def _coloring_checks(g: LabelledGraph) -> list[list[tuple[int, int, bool]]]:
    # each edge is checked once both endpoints are colored
    pos = {v: i for i, v in enumerate(g.vertices)}
    checks: list[list[tuple[int, int, bool]]] = [[] for _ in g.vertices]
    for e in g.edges:
        i, j = sorted((pos[e.u], pos[e.v]))
        checks[j].append((i, e.label, e.is_regular))
    return checks


def _admits(c, colors, checks_i, q) -> bool:
    for j, lab, regular in checks_i:
        if ((lab * (c - colors[j])) % q == 0) == regular:
            return False
    return True


def iter_colorings(g: LabelledGraph, q: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every arithmetic q-coloring as a tuple in vertex order."""
    n = len(g.vertices)
    _guard(q, n, "colorings q^|V|", cap)
    checks = _coloring_checks(g)
    colors = [0] * n

    def extend(i):
        if i == n:
            yield tuple(colors)
            return
        for c in range(q):
            if _admits(c, colors, checks[i], q):
                colors[i] = c
                yield from extend(i + 1)

    yield from extend(0)


def count_colorings(g: LabelledGraph, q: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of arithmetic q-colorings; same search as :func:`iter_colorings`."""
    n = len(g.vertices)
    _guard(q, n, "colorings q^|V|", cap)
    checks = _coloring_checks(g)
    colors = [0] * n

    if n == 0:
        return 1

    def count(i):
        checks_i = checks[i]
        last = i == n - 1
        total = 0
        for c in range(q):
            for j, lab, regular in checks_i:
                if ((lab * (c - colors[j])) % q == 0) == regular:
                    break
            else:
                colors[i] = c
                total += 1 if last else count(i + 1)
        return total

    return count(0)


class _FlowSearch:
    """Odometer over edge weights with conservation checked as soon as a
    vertex has all its incident edges weighted."""

    def __init__(self, og: OrientedGraph | LabelledGraph, q: int, cap: int):
        if isinstance(og, LabelledGraph):
            og = orient_default(og)
        g = og.base
        self.m = m = len(g.edges)
        _guard(q, m, "flows q^|E|", cap)
        self.q = q
        pos = {v: i for i, v in enumerate(g.vertices)}
        self.heads = [pos[h] for h, _ in og.directions]
        self.tails = [pos[t] for _, t in og.directions]
        self.labels = [e.label for e in g.edges]
        self.start = [1 if e.is_regular else 0 for e in g.edges]
        last: dict[int, int] = {}
        for j in range(m):
            last[self.heads[j]] = j
            last[self.tails[j]] = j
        self.closes: list[list[int]] = [[] for _ in range(m)]
        for v, j in last.items():
            self.closes[j].append(v)
        self.excess = [0] * len(g.vertices)
        self.weights = [0] * m

    def _set(self, j, w):
        lab = self.labels[j]
        self.excess[self.heads[j]] += lab * w
        self.excess[self.tails[j]] -= lab * w

    def _balanced(self, j):
        q = self.q
        for v in self.closes[j]:
            if self.excess[v] % q:
                return False
        return True

    def iterate(self, j=0):
        if j == self.m:
            yield tuple(self.weights)
            return
        for w in range(self.start[j], self.q):
            self.weights[j] = w
            self._set(j, w)
            if self._balanced(j):
                yield from self.iterate(j + 1)
            self._set(j, -w)

    def count(self) -> int:
        m, q = self.m, self.q
        if m == 0:
            return 1
        heads, tails, labels, start, closes = self.heads, self.tails, self.labels, self.start, self.closes
        excess = self.excess

        def walk(j):
            h, t, lab, cl = heads[j], tails[j], labels[j], closes[j]
            last = j == m - 1
            total = 0
            for w in range(start[j], q):
                d = lab * w
                excess[h] += d
                excess[t] -= d
                for v in cl:
                    if excess[v] % q:
                        break
                else:
                    total += 1 if last else walk(j + 1)
                excess[h] -= d
                excess[t] += d
            return total

        return walk(0)


def iter_flows(og: OrientedGraph | LabelledGraph, q: int,
               cap: int = DEFAULT_ENUM_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every arithmetic q-flow as a tuple of weights in edge order."""
    return _FlowSearch(og, q, cap).iterate()


def count_flows(og: OrientedGraph | LabelledGraph, q: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    return _FlowSearch(og, q, cap).count()
