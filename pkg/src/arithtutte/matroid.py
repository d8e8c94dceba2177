"""Arithmetic matroids: a rank function plus a multiplicity function on subsets.

Subsets of the ground set ``{0, ..., n-1}`` are passed to the public API as
iterables of indices and handled internally as bitmasks. Two backings exist:
one computes everything from the incidence vectors of a labelled graph, the
other stores explicit rank and multiplicity tables indexed by bitmask.
"""

from __future__ import annotations

import enum
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import CapExceededError
from .graph import IncidenceSystem, LabelledGraph, OrientedGraph, incidence_system, orient_default
from .linalg import IntMatrix, rank, torsion_order

DEFAULT_AXIOM_CAP = 8


class VectorClass(enum.Enum):
    FREE = "free"
    TORSION = "torsion"
    PROPER = "proper"


class Violation(NamedTuple):
    axiom: str
    witness: tuple[frozenset[int], ...]


class AxiomReport(NamedTuple):
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def _mask(subset: Iterable[int] | int, n: int) -> int:
    if isinstance(subset, int):
        raise TypeError("pass subsets as an iterable of element indices")
    m = 0
    for i in subset:
        if not 0 <= i < n:
            raise IndexError(f"element {i} outside ground set of size {n}")
        m |= 1 << i
    return m


def _elements(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


class ArithMatroid:
    """Arithmetic matroid on ground set ``range(ground_size)``.

    ``rank_fn`` and ``mult_fn`` take a bitmask. Values are cached per mask;
    the cache only ever gains entries with deterministic values, so
    concurrent readers are safe.
    """

    def __init__(
        self,
        ground_size: int,
        rank_fn: Callable[[int], int],
        mult_fn: Callable[[int], int],
        backing: IncidenceSystem | None = None,
    ):
        self.ground_size = ground_size
        self._rank_fn = rank_fn
        self._mult_fn = mult_fn
        self.backing = backing
        self._rank_cache: dict[int, int] = {}
        self._mult_cache: dict[int, int] = {}

    @property
    def full(self) -> int:
        return (1 << self.ground_size) - 1

    def rank_mask(self, mask: int) -> int:
        try:
            return self._rank_cache[mask]
        except KeyError:
            r = self._rank_cache[mask] = self._rank_fn(mask)
            return r

    def mult_mask(self, mask: int) -> int:
        try:
            return self._mult_cache[mask]
        except KeyError:
            m = self._mult_cache[mask] = self._mult_fn(mask)
            return m

    def rank(self, subset: Iterable[int] = ()) -> int:
        return self.rank_mask(_mask(subset, self.ground_size))

    def multiplicity(self, subset: Iterable[int] = ()) -> int:
        return self.mult_mask(_mask(subset, self.ground_size))

    def tables(self) -> tuple[list[int], list[int]]:
        """Rank and multiplicity tables indexed by bitmask."""
        n = 1 << self.ground_size
        return [self.rank_mask(s) for s in range(n)], [self.mult_mask(s) for s in range(n)]

    def __eq__(self, other):
        if not isinstance(other, ArithMatroid):
            return NotImplemented
        return self.ground_size == other.ground_size and self.tables() == other.tables()

    __hash__ = None

    def __repr__(self):
        kind = "incidence" if self.backing is not None else "table"
        return f"<ArithMatroid ground_size={self.ground_size} backing={kind}>"


def from_incidence(inc: IncidenceSystem) -> ArithMatroid:
    """Matroid of the regular columns viewed in Z^n / <dotted columns>.

    rk(A) = rank[A | X_D] - rank[X_D] and m(A) = torsion order of
    Z^n / <A, X_D>.
    """
    regs = inc.x_regular.columns()
    dots = inc.x_dotted.columns()
    n = inc.n
    base_rank = rank(inc.x_dotted)

    def stacked(mask):
        cols = [c for i, c in enumerate(regs) if mask >> i & 1]
        return IntMatrix.from_columns(cols + dots, n)

    return ArithMatroid(
        len(regs),
        lambda mask: rank(stacked(mask)) - base_rank,
        lambda mask: torsion_order(stacked(mask)),
        backing=inc,
    )


def matroid_of(g: LabelledGraph | OrientedGraph) -> ArithMatroid:
    """Arithmetic matroid of a labelled graph (default orientation if unoriented)."""
    og = orient_default(g) if isinstance(g, LabelledGraph) else g
    return from_incidence(incidence_system(og))


def from_tables(ground_size: int, rank_table: Sequence[int], mult_table: Sequence[int]) -> ArithMatroid:
    """Matroid given by explicit tables of length 2**ground_size indexed by bitmask."""
    size = 1 << ground_size
    if len(rank_table) != size or len(mult_table) != size:
        raise ValueError(f"tables must have {size} entries")
    if any(m < 1 for m in mult_table):
        raise ValueError("multiplicities must be positive")
    rt, mt = tuple(rank_table), tuple(mult_table)
    return ArithMatroid(ground_size, rt.__getitem__, mt.__getitem__)


def rank_of(m: ArithMatroid, subset: Iterable[int]) -> int:
    return m.rank(subset)


def multiplicity_of(m: ArithMatroid, subset: Iterable[int]) -> int:
    return m.multiplicity(subset)


def classify(m: ArithMatroid, v: int) -> VectorClass:
    if not 0 <= v < m.ground_size:
        raise IndexError(f"element {v} outside ground set of size {m.ground_size}")
    full = m.full
    rest = full & ~(1 << v)
    rk = m.rank_mask(full)
    deleted = m.rank_mask(rest)
    contracted = rk - m.rank_mask(1 << v)  # rk2(X \ v) = rk(X) - rk({v})
    if deleted == rk - 1 and contracted == rk - 1:
        return VectorClass.FREE
    if deleted == rk and contracted == rk:
        return VectorClass.TORSION
    if deleted == rk and contracted == rk - 1:
        return VectorClass.PROPER
    raise ValueError(f"element {v} fits no class; rank function is not a matroid rank")


def _drop_bit(mask: int, v: int) -> int:
    """Re-index a mask over X \\ {v} as a mask over X with bit v cleared."""
    low = mask & ((1 << v) - 1)
    return low | ((mask >> v) << (v + 1))


def deletion(m: ArithMatroid, v: int) -> ArithMatroid:
    """Delete element ``v``; the remaining elements are renumbered in order."""
    return from_tables(
        m.ground_size - 1,
        [m.rank_mask(_drop_bit(s, v)) for s in range(1 << (m.ground_size - 1))],
        [m.mult_mask(_drop_bit(s, v)) for s in range(1 << (m.ground_size - 1))],
    )


def contraction(m: ArithMatroid, v: int) -> ArithMatroid:
    """Contract element ``v``: rk2(A) = rk(A + v) - rk(v), m2(A) = m(A + v)."""
    bit = 1 << v
    rv = m.rank_mask(bit)
    return from_tables(
        m.ground_size - 1,
        [m.rank_mask(_drop_bit(s, v) | bit) - rv for s in range(1 << (m.ground_size - 1))],
        [m.mult_mask(_drop_bit(s, v) | bit) for s in range(1 << (m.ground_size - 1))],
    )


def dual(m: ArithMatroid) -> ArithMatroid:
    """rk*(A) = |A| - rk(X) + rk(X \\ A) and m*(A) = m(X \\ A)."""
    full = m.full
    rk = m.rank_mask(full)
    size = 1 << m.ground_size
    return from_tables(
        m.ground_size,
        [s.bit_count() - rk + m.rank_mask(full ^ s) for s in range(size)],
        [m.mult_mask(full ^ s) for s in range(size)],
    )


def direct_sum(m1: ArithMatroid, m2: ArithMatroid) -> ArithMatroid:
    """Elements of ``m1`` come first, then those of ``m2`` shifted by m1.ground_size."""
    n1 = m1.ground_size
    low = (1 << n1) - 1
    size = 1 << (n1 + m2.ground_size)
    return from_tables(
        n1 + m2.ground_size,
        [m1.rank_mask(s & low) + m2.rank_mask(s >> n1) for s in range(size)],
        [m1.mult_mask(s & low) * m2.mult_mask(s >> n1) for s in range(size)],
    )


def check_axioms(m: ArithMatroid, cap: int = DEFAULT_AXIOM_CAP) -> AxiomReport:
    """Check matroid rank axioms R1-R3 and multiplicity axioms P1-P5 exhaustively."""
    n = m.ground_size
    if n > cap:
        raise CapExceededError("axiom check ground set", n, cap)
    size = 1 << n
    full = size - 1
    rk = m.rank_mask
    mu = m.mult_mask
    r_full = rk(full)

    def dual_rank(s):
        return s.bit_count() - r_full + rk(full ^ s)

    bad: list[Violation] = []

    def report(axiom, *masks):
        bad.append(Violation(axiom, tuple(_elements(s) for s in masks)))

    for a in range(size):
        if not 0 <= rk(a) <= a.bit_count():
            report("R1", a)
    for a in range(size):
        for v in range(n):
            bit = 1 << v
            if a & bit:
                continue
            b = a | bit
            if rk(b) < rk(a):
                report("R2", a, b)
            elif rk(b) == rk(a):
                if mu(a) % mu(b):
                    report("P1", a, b)
            elif mu(b) % mu(a):
                report("P2", a, b)
    for a in range(size):
        for b in range(a, size):
            if rk(a | b) + rk(a & b) > rk(a) + rk(b):
                report("R3", a, b)

    for b in range(size):
        for a in _submasks(b):
            rest = b ^ a
            ra = rk(a)
            for f in _submasks(rest):
                t = rest ^ f
                if rk(b) != ra + f.bit_count() or rk(a | t) != ra:
                    continue
                if all(rk(a | s) == ra + (s & f).bit_count() for s in _submasks(rest)):
                    if mu(a) * mu(b) != mu(a | f) * mu(a | t):
                        report("P3", a, f, t)

    for b in range(size):
        for a in _submasks(b):
            rest = b ^ a
            if rk(a) == rk(b):
                total = sum((-1) ** s.bit_count() * mu(a | s) for s in _submasks(rest))
                if total < 0:
                    report("P4", a, b)
            if dual_rank(a) == dual_rank(b):
                total = sum((-1) ** s.bit_count() * mu(full ^ (a | s)) for s in _submasks(rest))
                if total < 0:
                    report("P5", a, b)
    return AxiomReport(tuple(bad))
