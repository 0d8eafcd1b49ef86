"""Commuting graphs on non-central elements, and their component structure.

Adjacency is stored as one bitmask per vertex (dense bit matrix); vertex
positions index into ``vertices``, which holds the underlying element
indices in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AbelianGroupError, IndexOutOfRange
from .groups import FiniteGroup, center


@dataclass(frozen=True)
class CommutingGraph:
    vertices: tuple[int, ...]
    adjacency: tuple[int, ...]
    edge_count: int

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def to_matrix(self) -> list[list[int]]:
        """Adjacency as a 0/1 matrix over vertex positions."""
        n = self.vertex_count
        return [[self.adjacency[i] >> j & 1 for j in range(n)] for i in range(n)]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) position pairs with i < j, sorted."""
        out = []
        for i in range(self.vertex_count):
            rest = self.adjacency[i] >> (i + 1) << (i + 1)
            while rest:
                j = (rest & -rest).bit_length() - 1
                out.append((i, j))
                rest &= rest - 1
        return out


@dataclass(frozen=True)
class CliqueDecomposition:
    """Connected-component sizes plus whether every component is complete."""

    component_sizes: tuple[int, ...]
    all_cliques: bool


def build_commuting_graph(group: FiniteGroup) -> CommutingGraph:
    """Graph on the non-central elements, adjacent iff they commute."""
    if group.is_abelian():
        raise AbelianGroupError("commuting graph is undefined for abelian groups")
    central = set(center(group).members)
    verts = tuple(x for x in range(group.order) if x not in central)
    k = len(verts)
    adj = [0] * k
    edges = 0
    for i in range(k):
        for j in range(i + 1, k):
            if group.commutes(verts[i], verts[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                edges += 1
    return CommutingGraph(verts, tuple(adj), edges)


def raw_graph(
    vertex_count: int,
    edges: Iterable[tuple[int, int]],
    vertices: Sequence[int] | None = None,
) -> CommutingGraph:
    """Wrap an arbitrary simple graph in the same container (for probes)."""
    verts = tuple(vertices) if vertices is not None else tuple(range(vertex_count))
    if len(verts) != vertex_count:
        raise IndexOutOfRange("vertex list length does not match vertex count")
    adj = [0] * vertex_count
    count = 0
    for u, v in edges:
        if u == v or not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise IndexOutOfRange(f"bad edge ({u},{v}) for {vertex_count} vertices")
        if not adj[u] >> v & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            count += 1
    return CommutingGraph(verts, tuple(adj), count)


def connected_components(graph: CommutingGraph) -> list[tuple[int, ...]]:
    """Partition of the vertex positions by reachability, each sorted."""
    n = graph.vertex_count
    adj = graph.adjacency
    unseen = (1 << n) - 1
    components = []
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            grow = 0
            rest = frontier
            while rest:
                v = (rest & -rest).bit_length() - 1
                grow |= adj[v]
                rest &= rest - 1
            frontier = grow & ~comp & unseen
            comp |= frontier
        unseen &= ~comp
        components.append(tuple(_bits(comp)))
    return components


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def clique_decomposition(graph: CommutingGraph) -> CliqueDecomposition:
    """Component sizes, checking completeness by the edge-count formula."""
    sizes = []
    all_cliques = True
    for comp in connected_components(graph):
        k = len(comp)
        mask = 0
        for v in comp:
            mask |= 1 << v
        internal = sum((graph.adjacency[v] & mask).bit_count() for v in comp) // 2
        if internal != k * (k - 1) // 2:
            all_cliques = False
        sizes.append(k)
    sizes.sort(reverse=True)
    return CliqueDecomposition(tuple(sizes), all_cliques)


def export_dot(graph: CommutingGraph, names: Sequence[str] | None = None) -> str:
    """Deterministic DOT text; vertices labelled by element names."""

    def label(pos: int) -> str:
        element = graph.vertices[pos]
        text = names[element] if names is not None else str(element)
        return '"%s"' % text.replace("\\", "\\\\").replace('"', '\\"')

    lines = ["graph commuting {"]
    for pos in range(graph.vertex_count):
        lines.append(f"  {label(pos)};")
    for u, v in graph.edges():
        lines.append(f"  {label(u)} -- {label(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(graph: CommutingGraph, names: Sequence[str] | None = None) -> dict:
    """Vertex-name / edge-list embedding used inside analysis reports."""

    def label(pos: int) -> str:
        element = graph.vertices[pos]
        return names[element] if names is not None else str(element)

    return {
        "vertices": [label(p) for p in range(graph.vertex_count)],
        "edges": [[label(u), label(v)] for u, v in graph.edges()],
    }
