"""Arithmetic chromatic and flow polynomials as specializations of M(x, y).

    chi(q)  = (-1)^(|V_bar| - k) q^k M(1 - q, 0)
    chi*(q) = (-1)^(|R| - |V_bar| + k) q^(|D| - |V| + |V_bar|) M(0, 1 - q)

where k counts connected components of G and V_bar is the vertex set of G
with its dotted edges contracted. Both only count colorings/flows when q is
admissible, i.e. a positive multiple of every edge label.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InadmissibleError
from .graph import LabelledGraph, lcm_labels, quotient_stats
from .poly import BiPoly, UniPoly, shifted_powers
from .tutte import arithmetic_tutte


@dataclass(frozen=True)
class Admissibility:
    lcm_labels: int

    @classmethod
    def of(cls, g: LabelledGraph) -> Admissibility:
        return cls(lcm_labels(g))

    def is_admissible(self, q: int) -> bool:
        return q > 0 and q % self.lcm_labels == 0


def substitute_x(p: BiPoly, y0: int) -> UniPoly:
    """p(1 - q, y0) as a polynomial in q."""
    out = UniPoly()
    for (a, b), c in p.terms.items():
        out = out + UniPoly(shifted_powers(1, -1, a)) * (c * y0 ** b)
    return out


def substitute_y(p: BiPoly, x0: int) -> UniPoly:
    """p(x0, 1 - q) as a polynomial in q."""
    out = UniPoly()
    for (a, b), c in p.terms.items():
        out = out + UniPoly(shifted_powers(1, -1, b)) * (c * x0 ** a)
    return out


def chromatic_poly(g: LabelledGraph, method: str = "subset", tutte: BiPoly | None = None) -> UniPoly:
    st = quotient_stats(g)
    m = arithmetic_tutte(g, method) if tutte is None else tutte
    sign = -1 if (st.n_bar - st.k) % 2 else 1
    return substitute_x(m, 0).shift(st.k) * sign


def flow_poly(g: LabelledGraph, method: str = "subset", tutte: BiPoly | None = None) -> UniPoly:
    st = quotient_stats(g)
    m = arithmetic_tutte(g, method) if tutte is None else tutte
    sign = -1 if (st.r_count - st.n_bar + st.k) % 2 else 1
    return substitute_y(m, 0).shift(st.d_count - st.v_count + st.n_bar) * sign


def eval_counting(p: UniPoly, g: LabelledGraph, q: int) -> int:
    """Evaluate ``p`` at ``q`` after checking that q is admissible for ``g``."""
    adm = Admissibility.of(g)
    if not adm.is_admissible(q):
        raise InadmissibleError(q, adm.lcm_labels)
    return p(q)
