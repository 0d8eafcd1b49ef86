import pytest

from commspec.catalog import FamilySpec, build
from commspec.errors import AbelianGroupError, IndexOutOfRange
from commspec.graphs import (
    build_commuting_graph,
    clique_decomposition,
    connected_components,
    export_dot,
    graph_json,
    raw_graph,
)
from commspec.groups import center, centralizer


def test_d6_graph(d6):
    graph = build_commuting_graph(d6)
    assert graph.vertices == (1, 2, 3, 4, 5)
    # the only commuting non-central pair is {a, a^2}
    a = graph.vertices.index(d6.names.index("a"))
    a2 = graph.vertices.index(d6.names.index("a^2"))
    assert graph.edges() == [(a, a2)]
    assert graph.edge_count == 1
    assert len(connected_components(graph)) == 4


def test_q8_graph(q8):
    graph = build_commuting_graph(q8)
    assert graph.vertex_count == 6
    components = connected_components(graph)
    assert sorted(len(c) for c in components) == [2, 2, 2]
    element_sets = {
        frozenset(q8.names[graph.vertices[p]] for p in comp) for comp in components
    }
    assert element_sets == {
        frozenset({"a", "a^3"}),
        frozenset({"b", "a^2b"}),
        frozenset({"ab", "a^3b"}),
    }


def test_abelian_group_rejected():
    with pytest.raises(AbelianGroupError):
        build_commuting_graph(build(FamilySpec.cyclic(6)))


def test_heis3_graph_is_four_cliques_of_six(heis3):
    graph = build_commuting_graph(heis3)
    decomposition = clique_decomposition(graph)
    assert decomposition.component_sizes == (6, 6, 6, 6)
    assert decomposition.all_cliques


def test_d12_component_sizes(d12):
    graph = build_commuting_graph(d12)
    decomposition = clique_decomposition(graph)
    assert decomposition.component_sizes == (4, 2, 2, 2)
    assert decomposition.all_cliques


def test_vertex_count_and_degree_identity(d12):
    graph = build_commuting_graph(d12)
    z = center(d12)
    assert graph.vertex_count == d12.order - z.size
    for pos, element in enumerate(graph.vertices):
        assert graph.degree(pos) == centralizer(d12, element).size - z.size - 1


def test_edgeless_components():
    graph = raw_graph(3, [])
    assert connected_components(graph) == [(0,), (1,), (2,)]


def test_four_cycle_is_not_a_clique_union():
    c4 = raw_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    decomposition = clique_decomposition(c4)
    assert decomposition.component_sizes == (4,)
    assert not decomposition.all_cliques


def test_complete_graph_is_a_clique():
    k5 = raw_graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    decomposition = clique_decomposition(k5)
    assert decomposition.component_sizes == (5,)
    assert decomposition.all_cliques


def test_raw_graph_rejects_bad_edges():
    with pytest.raises(IndexOutOfRange):
        raw_graph(3, [(0, 3)])
    with pytest.raises(IndexOutOfRange):
        raw_graph(3, [(1, 1)])


def test_export_dot_d6(d6):
    graph = build_commuting_graph(d6)
    dot = export_dot(graph, d6.names)
    edge_lines = [line for line in dot.splitlines() if " -- " in line]
    assert edge_lines == ['  "a" -- "a^2";']
    assert dot.startswith("graph commuting {")
    assert dot.endswith("}\n")


def test_export_dot_q8(q8):
    graph = build_commuting_graph(q8)
    dot = export_dot(graph, q8.names)
    lines = dot.splitlines()
    node_lines = [line for line in lines if line.endswith(";") and " -- " not in line]
    edge_lines = [line for line in lines if " -- " in line]
    assert len(node_lines) == 6
    assert len(edge_lines) == 3


def test_export_dot_is_deterministic(d6):
    first = export_dot(build_commuting_graph(d6), d6.names)
    second = export_dot(build_commuting_graph(build(FamilySpec.dihedral(3))), d6.names)
    assert first == second


def test_export_dot_without_names():
    dot = export_dot(raw_graph(2, [(0, 1)]))
    assert '"0" -- "1";' in dot


def test_export_dot_edgeless_graph_has_only_node_statements():
    dot = export_dot(raw_graph(3, []))
    assert " -- " not in dot
    assert dot.count(";") == 3


def test_graph_json(q8):
    graph = build_commuting_graph(q8)
    payload = graph_json(graph, q8.names)
    assert payload["vertices"] == ["a", "a^3", "b", "ab", "a^2b", "a^3b"]
    assert ["a", "a^3"] in payload["edges"]
    assert len(payload["edges"]) == 3
