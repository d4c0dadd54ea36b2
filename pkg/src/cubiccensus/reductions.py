"""Graph surgery around a ladder-bridge.

Given a ladder-bridge ``xy`` of a connected bipartite cubic graph, the rest of
the graph falls into two components A and B.  ``x`` has neighbours ``a`` in A
and ``b`` in B, ``y`` has ``c`` in A and ``d`` in B.  Two transforms remove
``x`` and ``y``:

* when ``bd`` is an edge, ``split_adjacent_ladder_bridges`` produces two
  smaller graphs whose 2-factor counts add up to that of the original;
* when neither ``ac`` nor ``bd`` is an edge, ``contract_isolated_ladder_bridge``
  reconnects the stubs across, giving a two-component graph with at least as
  many 2-factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotLadderBridgeError, PreconditionViolatedError
from .graph import (
    Graph,
    bipartition,
    components,
    induced_without,
    is_connected,
    is_cubic,
    iter_bits,
)


@dataclass(frozen=True)
class LadderBridgeContext:
    x: int
    y: int
    a: int
    b: int
    c: int
    d: int
    side_a: int  # vertex mask of component A
    side_b: int

    def swapped(self) -> "LadderBridgeContext":
        """Same ladder-bridge with the roles of A and B exchanged."""
        return LadderBridgeContext(self.x, self.y, self.b, self.a, self.d, self.c, self.side_b, self.side_a)


def _check_host(g: Graph) -> None:
    if not (is_cubic(g) and is_connected(g) and bipartition(g) is not None):
        raise PreconditionViolatedError("expected a simple connected bipartite cubic graph")


def locate_context(g: Graph, edge: int) -> LadderBridgeContext:
    _check_host(g)
    x, y = g.edges[edge]
    keep = ((1 << g.num_vertices) - 1) & ~(1 << x) & ~(1 << y)
    comps = components(g, keep)
    if len(comps) != 2:
        raise NotLadderBridgeError(f"edge {x}-{y} leaves {len(comps)} component(s)")
    nx_ = [w for w in g.neighbors(x) if w != y]
    ny = [w for w in g.neighbors(y) if w != x]
    side_a = next(c for c in comps if c >> min(nx_ + ny) & 1)
    side_b = next(c for c in comps if c != side_a)
    in_a = [w for w in nx_ if side_a >> w & 1]
    in_a_y = [w for w in ny if side_a >> w & 1]
    if len(in_a) != 1 or len(in_a_y) != 1:
        raise PreconditionViolatedError("ladder-bridge endpoints do not straddle both components")
    a = in_a[0]
    b = next(w for w in nx_ if w != a)
    c = in_a_y[0]
    d = next(w for w in ny if w != c)
    return LadderBridgeContext(x, y, a, b, c, d, side_a, side_b)


def _rebuild(g: Graph, removed: list[int], added: list[tuple[int, int]]) -> Graph:
    for u, v in added:
        if g.has_edge(u, v):
            raise PreconditionViolatedError(f"edge {u}-{v} is already present")
    sub = induced_without(g, removed)
    index = {old: new for new, old in enumerate(sub.labels)}
    adj = list(sub.graph.adjacency)
    for u, v in added:
        iu, iv = index[u], index[v]
        if adj[iu] >> iv & 1:
            raise PreconditionViolatedError(f"edge {u}-{v} added twice")
        adj[iu] |= 1 << iv
        adj[iv] |= 1 << iu
    return Graph.from_masks(adj)


def _assert_bipartite_cubic(h: Graph, expected_components: int) -> None:
    if not is_cubic(h) or bipartition(h) is None or len(components(h)) != expected_components:
        raise PreconditionViolatedError(
            f"transform did not yield a bipartite cubic graph with {expected_components} component(s)"
        )


def split_adjacent_ladder_bridges(g: Graph, ctx: LadderBridgeContext) -> tuple[Graph, Graph]:
    """Return (G', G'') with Fac(G) = Fac(G') + Fac(G'').

    G' drops x, y and joins a-d, c-b.  G'' also drops b, d and joins a-e, c-f,
    where e and f are the remaining neighbours of b and d.
    """
    x, y, a, b, c, d = ctx.x, ctx.y, ctx.a, ctx.b, ctx.c, ctx.d
    if not g.has_edge(b, d):
        raise PreconditionViolatedError(f"b={b} and d={d} are not adjacent")
    e = next(w for w in iter_bits(g.adjacency[b]) if w not in (x, d))
    f = next(w for w in iter_bits(g.adjacency[d]) if w not in (y, b))
    g1 = _rebuild(g, [x, y], [(a, d), (c, b)])
    g2 = _rebuild(g, [x, y, b, d], [(a, e), (c, f)])
    _assert_bipartite_cubic(g1, 1)
    _assert_bipartite_cubic(g2, 1)
    return g1, g2


def contract_isolated_ladder_bridge(g: Graph, ctx: LadderBridgeContext) -> Graph:
    """Drop x, y and join a-c, b-d; the result has exactly two components."""
    if g.has_edge(ctx.a, ctx.c) or g.has_edge(ctx.b, ctx.d):
        raise PreconditionViolatedError("a-c or b-d already adjacent; use the split transform")
    h = _rebuild(g, [ctx.x, ctx.y], [(ctx.a, ctx.c), (ctx.b, ctx.d)])
    _assert_bipartite_cubic(h, 2)
    return h
