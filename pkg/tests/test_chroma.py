import pytest
from hypothesis import given, settings

from arithtutte import (
    Admissibility,
    InadmissibleError,
    LabelledGraph,
    UniPoly,
    chromatic_poly,
    contract_edge,
    count_colorings,
    count_flows,
    delete_edge,
    eval_counting,
    flow_poly,
)
from arithtutte.graph import add_isolated_vertex, components, disjoint_union

from corpus import color_graph, k3, labelgraph, labelled_graphs, inadmissible_graph, simple_graphs


def multiples(g, n=3):
    lcm = Admissibility.of(g).lcm_labels
    return [lcm * i for i in range(1, n + 1)]


def test_color_example():
    g = color_graph()
    assert chromatic_poly(g) == UniPoly([0, -8, 2])
    assert flow_poly(g) == UniPoly([-8, 2])
    assert eval_counting(chromatic_poly(g), g, 6) == 24
    assert eval_counting(flow_poly(g), g, 6) == 4
    assert chromatic_poly(g, method="dc") == chromatic_poly(g)


def test_inadmissible_example():
    g = inadmissible_graph()
    assert chromatic_poly(g) == UniPoly([0, 12])
    assert flow_poly(g) == UniPoly([12])
    assert eval_counting(chromatic_poly(g), g, 6) == 72


def test_k3_classical():
    q = UniPoly([0, 1])
    assert chromatic_poly(k3()) == q * (q - 1) * (q - 2)
    assert flow_poly(k3()) == q - 1


def test_labelgraph_counts():
    g = labelgraph()
    for q in (6, 12):
        assert eval_counting(chromatic_poly(g), g, q) == count_colorings(g, q)
        assert eval_counting(flow_poly(g), g, q) == count_flows(g, q)


def test_inadmissible_q():
    g = color_graph()
    with pytest.raises(InadmissibleError) as exc:
        eval_counting(chromatic_poly(g), g, 2)
    assert exc.value.q == 2 and exc.value.lcm == 6
    assert "q=2" in str(exc.value) and "L=6" in str(exc.value)
    with pytest.raises(InadmissibleError):
        eval_counting(flow_poly(g), g, 0)


def test_admissibility():
    assert Admissibility.of(color_graph()).lcm_labels == 6
    assert Admissibility.of(LabelledGraph(("a", "b"))).lcm_labels == 1
    adm = Admissibility(4)
    assert [q for q in range(1, 13) if adm.is_admissible(q)] == [4, 8, 12]
    assert not adm.is_admissible(-4)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_edgeless(n):
    g = LabelledGraph(tuple(f"v{i}" for i in range(n)))
    assert chromatic_poly(g) == UniPoly([0] * n + [1])
    assert flow_poly(g) == UniPoly([1])


@settings(max_examples=100, deadline=None)
@given(labelled_graphs(max_vertices=4))
def test_isolated_vertex(g):
    h = add_isolated_vertex(g)
    assert chromatic_poly(h) == chromatic_poly(g) * UniPoly([0, 1])
    assert flow_poly(h) == flow_poly(g)


@settings(max_examples=100, deadline=None)
@given(labelled_graphs(max_vertices=3, max_edges=3), labelled_graphs(max_vertices=3, max_edges=3))
def test_multiplicative_over_components(g1, g2):
    g = disjoint_union(g1, g2)
    assert chromatic_poly(g) == chromatic_poly(g1) * chromatic_poly(g2)
    assert flow_poly(g) == flow_poly(g1) * flow_poly(g2)


@settings(max_examples=80, deadline=None)
@given(labelled_graphs(max_vertices=5, max_edges=6))
def test_component_split_of_random_graph(g):
    parts = components(g)
    chi, flow = UniPoly([1]), UniPoly([1])
    for p in parts:
        chi, flow = chi * chromatic_poly(p), flow * flow_poly(p)
    assert chromatic_poly(g) == chi
    assert flow_poly(g) == flow


@settings(max_examples=150, deadline=None)
@given(labelled_graphs())
def test_deletion_contraction_identities(g):
    chi, flow = chromatic_poly(g), flow_poly(g)
    for i in g.regular:
        d, c = delete_edge(g, i), contract_edge(g, i)
        chi_d, chi_c = chromatic_poly(d), chromatic_poly(c)
        flow_d, flow_c = flow_poly(d), flow_poly(c)
        for q in multiples(g):
            assert chi(q) == chi_d(q) - chi_c(q)
            assert flow(q) == flow_c(q) - flow_d(q)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_classical_reduction_matches_enumeration(n):
    for g in simple_graphs(n):
        chi, flow = chromatic_poly(g), flow_poly(g)
        assert chi.degree == n
        for q in range(1, n + 2):
            assert chi(q) == count_colorings(g, q)
        for q in range(1, len(g.edges) + 2):
            assert flow(q) == count_flows(g, q)


@settings(max_examples=150, deadline=None)
@given(labelled_graphs(max_vertices=4, max_edges=5))
def test_counts_at_admissible_q(g):
    chi, flow = chromatic_poly(g), flow_poly(g)
    for q in multiples(g, 2):
        if q ** len(g.edges) <= 10**6:
            assert eval_counting(flow, g, q) == count_flows(g, q)
        if q ** len(g.vertices) <= 10**6:
            assert eval_counting(chi, g, q) == count_colorings(g, q)
