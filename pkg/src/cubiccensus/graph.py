"""Simple undirected graphs on at most 64 vertices.

A graph stores one neighbour bitmask per vertex plus the sorted edge list;
the position of an edge in that list is its edge id.  Everything here is a
pure function of immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    DuplicateEdgeError,
    NotConnectedError,
    NotCubicError,
    PreconditionViolatedError,
    SelfLoopError,
    TooManyVerticesError,
    VertexOutOfRangeError,
)

MAX_VERTICES = 64


def iter_bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=True)
class Graph:
    num_vertices: int
    adjacency: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_masks(cls, adjacency: Sequence[int]) -> "Graph":
        """Build from neighbour bitmasks that are already known to be valid."""
        n = len(adjacency)
        edges = tuple(
            (u, v) for u in range(n) for v in iter_bits(adjacency[u] >> (u + 1) << (u + 1))
        )
        return cls(n, tuple(adjacency), edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    @cached_property
    def edge_ids(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.edge_ids[(u, v)]

    @cached_property
    def incident_edges(self) -> tuple[int, ...]:
        """Per vertex, a bitmask over edge ids of the incident edges."""
        inc = [0] * self.num_vertices
        for i, (u, v) in enumerate(self.edges):
            inc[u] |= 1 << i
            inc[v] |= 1 << i
        return tuple(inc)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.num_vertices
        for v, mask in enumerate(self.adjacency):
            new = 0
            for w in iter_bits(mask):
                new |= 1 << perm[w]
            adj[perm[v]] = new
        return Graph.from_masks(adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.num_vertices}, m={self.num_edges})"


def build_graph(num_vertices: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the normalised :class:`Graph`."""
    if num_vertices > MAX_VERTICES:
        raise TooManyVerticesError(f"{num_vertices} vertices exceeds the cap of {MAX_VERTICES}")
    if num_vertices < 0:
        raise VertexOutOfRangeError("negative vertex count")
    adj = [0] * num_vertices
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{num_vertices - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if adj[u] >> v & 1:
            raise DuplicateEdgeError(f"edge ({u}, {v}) given twice")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph.from_masks(adj)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    for g in graphs:
        off = len(adj)
        adj.extend(m << off for m in g.adjacency)
    if len(adj) > MAX_VERTICES:
        raise TooManyVerticesError(f"union has {len(adj)} vertices")
    return Graph.from_masks(adj)


def components(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest vertex.

    ``within`` restricts the search to the induced subgraph on that mask.
    """
    remaining = (1 << g.num_vertices) - 1 if within is None else within
    comps = []
    adj = g.adjacency
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_cubic(g: Graph) -> bool:
    return all(m.bit_count() == 3 for m in g.adjacency)


def bipartition(g: Graph) -> Optional[tuple[int, int]]:
    """Return a proper 2-colouring as two vertex masks, or None if none exists."""
    color = [-1] * g.num_vertices
    for s in range(g.num_vertices):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in iter_bits(g.adjacency[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    left = sum(1 << v for v in range(g.num_vertices) if color[v] == 0)
    return left, ((1 << g.num_vertices) - 1) & ~left


class Classification(NamedTuple):
    is_cubic: bool
    is_connected: bool
    is_bipartite: bool
    bipartition: Optional[tuple[list[int], list[int]]]


def classify(g: Graph) -> Classification:
    parts = bipartition(g)
    return Classification(
        is_cubic=is_cubic(g),
        is_connected=is_connected(g),
        is_bipartite=parts is not None,
        bipartition=None if parts is None else (list(iter_bits(parts[0])), list(iter_bits(parts[1]))),
    )


def cyclomatic_number(g: Graph) -> int:
    """|E| - |V| + 1 for a connected graph."""
    if not is_connected(g):
        raise NotConnectedError("cyclomatic number is defined here for connected graphs only")
    return g.num_edges - g.num_vertices + 1


def find_bridges(g: Graph) -> set[int]:
    """Edge ids of all bridges, by iterative low-link DFS."""
    n = g.num_vertices
    disc = [-1] * n
    low = [0] * n
    bridges: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent edge id, iterator over neighbours)
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w in it:
                eid = g.edge_id(v, w)
                if eid == pe:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, iter(g.neighbors(w))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.add(pe)
    return bridges


class InducedSubgraph(NamedTuple):
    graph: Graph
    component_count: int
    labels: tuple[int, ...]  # labels[new] = old vertex


def induced_without(g: Graph, removed: Iterable[int]) -> InducedSubgraph:
    """Delete ``removed`` and compact the remaining labels in increasing order."""
    drop = 0
    for v in removed:
        drop |= 1 << v
    keep = [v for v in range(g.num_vertices) if not drop >> v & 1]
    index = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        adj.append(sum(1 << index[w] for w in iter_bits(g.adjacency[old] & ~drop)))
    h = Graph.from_masks(adj)
    return InducedSubgraph(h, len(components(h)), tuple(keep))


def _require_connected_bipartite_cubic(g: Graph) -> None:
    if not (is_cubic(g) and is_connected(g) and bipartition(g) is not None):
        raise PreconditionViolatedError("expected a simple connected bipartite cubic graph")


def is_ladder_bridge(g: Graph, u: int, v: int) -> bool:
    keep = ((1 << g.num_vertices) - 1) & ~(1 << u) & ~(1 << v)
    return len(components(g, keep)) > 1


def find_ladder_bridges(g: Graph) -> set[int]:
    """Edges whose two endpoints, once deleted, leave a disconnected graph."""
    _require_connected_bipartite_cubic(g)
    return {i for i, (u, v) in enumerate(g.edges) if is_ladder_bridge(g, u, v)}


def double(g: Graph) -> Graph:
    """Bipartite double cover: (v, side) is vertex ``v + side*|V|``."""
    if not is_cubic(g):
        raise NotCubicError("doubling is defined for cubic graphs")
    n = g.num_vertices
    edges = []
    for v, w in g.edges:
        edges.append((v, w + n))
        edges.append((w, v + n))
    return build_graph(2 * n, edges)
