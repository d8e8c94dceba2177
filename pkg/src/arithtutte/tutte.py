"""Arithmetic and classical Tutte polynomials.

Two independent routes compute the arithmetic Tutte polynomial of a labelled
graph: direct expansion over all subsets of the regular edges, and the
deletion-contraction recursion on the graph itself. They must agree.
"""

from __future__ import annotations

from .errors import CapExceededError
from .graph import LabelledGraph, contract_edge, delete_edge, incidence_system, orient_default
from .linalg import torsion_order
from .matroid import ArithMatroid, VectorClass, classify, matroid_of
from .poly import BiPoly, eval_bipoly

DEFAULT_SUBSET_CAP = 20

__all__ = [
    "arithmetic_tutte_subset",
    "arithmetic_tutte_dc",
    "arithmetic_tutte",
    "classical_tutte",
    "eval_bipoly",
]


def _corank_nullity_sum(m: ArithMatroid, weight, cap: int) -> BiPoly:
    n = m.ground_size
    if n > cap:
        raise CapExceededError("subset expansion ground set", n, cap)
    r_full = m.rank_mask(m.full)
    # group by (corank, nullity) first, expand the binomial powers once per group
    grouped: dict[tuple[int, int], int] = {}
    for s in range(1 << n):
        r = m.rank_mask(s)
        key = (r_full - r, s.bit_count() - r)
        grouped[key] = grouped.get(key, 0) + weight(s)
    x1 = BiPoly({(1, 0): 1, (0, 0): -1})
    y1 = BiPoly({(0, 1): 1, (0, 0): -1})
    total = BiPoly()
    for (a, b), c in grouped.items():
        total = total + (x1 ** a) * (y1 ** b) * c
    return total


def arithmetic_tutte_subset(m: ArithMatroid, cap: int = DEFAULT_SUBSET_CAP) -> BiPoly:
    """Sum over all subsets A of m(A) (x-1)^(rk X - rk A) (y-1)^(|A| - rk A)."""
    return _corank_nullity_sum(m, m.mult_mask, cap)


def classical_tutte(m: ArithMatroid, cap: int = DEFAULT_SUBSET_CAP) -> BiPoly:
    """Tutte polynomial of the underlying matroid (multiplicities ignored)."""
    return _corank_nullity_sum(m, lambda s: 1, cap)


def arithmetic_tutte_dc(g: LabelledGraph) -> BiPoly:
    """Deletion-contraction on the highest-index regular edge.

    Proper:  M = M(G-e) + M(G/e)
    Free:    M = (x-1) M(G-e) + M(G/e)
    Torsion: M = M(G-e) + (y-1) M(G/e)
    With no regular edges left, M is the constant torsion order of [X_D].
    """
    regular = g.regular
    if not regular:
        inc = incidence_system(orient_default(g))
        return BiPoly.constant(torsion_order(inc.x_dotted))
    e = regular[-1]
    cls = classify(matroid_of(g), len(regular) - 1)
    deleted = arithmetic_tutte_dc(delete_edge(g, e))
    contracted = arithmetic_tutte_dc(contract_edge(g, e))
    if cls is VectorClass.FREE:
        return (BiPoly.x() - 1) * deleted + contracted
    if cls is VectorClass.TORSION:
        return deleted + (BiPoly.y() - 1) * contracted
    return deleted + contracted


def arithmetic_tutte(g: LabelledGraph, method: str = "subset") -> BiPoly:
    """Arithmetic Tutte polynomial of a graph by ``method`` ('subset' or 'dc')."""
    if method == "subset":
        return arithmetic_tutte_subset(matroid_of(g))
    if method == "dc":
        return arithmetic_tutte_dc(g)
    raise ValueError(f"unknown method {method!r}")
