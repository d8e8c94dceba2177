"""Arithmetic Tutte polynomials of labelled graphs, with arithmetic chromatic
and flow polynomials and brute-force counters to check them against."""

from .brute import count_colorings, count_flows, iter_colorings, iter_flows
from .chroma import Admissibility, chromatic_poly, eval_counting, flow_poly
from .errors import (
    ArithTutteError,
    CapExceededError,
    GraphFormatError,
    InadmissibleError,
    NotRegularEdgeError,
)
from .graph import (
    Edge,
    EdgeKind,
    IncidenceSystem,
    LabelledGraph,
    OrientedGraph,
    QuotientStats,
    contract_edge,
    delete_edge,
    incidence_system,
    orient_default,
    parse_graph,
    quotient_stats,
    read_graph,
    serialize_graph,
)
from .linalg import IntMatrix, SnfResult, minor_gcd_oracle, rank, smith_normal_form, torsion_order
from .matroid import (
    ArithMatroid,
    AxiomReport,
    VectorClass,
    check_axioms,
    classify,
    direct_sum,
    dual,
    from_incidence,
    from_tables,
    matroid_of,
    multiplicity_of,
    rank_of,
)
from .poly import BiPoly, UniPoly, eval_bipoly
from .tutte import arithmetic_tutte, arithmetic_tutte_dc, arithmetic_tutte_subset, classical_tutte

__version__ = "0.1.0"
