"""Exact counters for perfect matchings, 2-factors, cycles and the coloring sum.

The four routes are deliberately implemented independently of one another so
that the identities between them are genuine cross-checks:

* perfect matchings by memoised branching on the lowest uncovered vertex,
* 2-factors by backtracking over edges with degree bounds,
* the homogeneous-vertex coloring sum by brute enumeration (vectorised),
* the vertex/edge tensor network by frontier contraction.
"""

from __future__ import annotations

from collections import deque
from typing import Mapping, NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    CyclomaticTooLargeError,
    EdgeCountTooLargeError,
    NotConnectedError,
    NotCubicError,
    NotDivisibleError,
)
from .graph import Graph, components, is_cubic, iter_bits

MAX_COLORING_EDGES = 30
MAX_CYCLE_RANK = 30


def _bfs_order(g: Graph) -> list[int]:
    """Vertices in BFS order, component by component (keeps frontiers thin)."""
    seen = 0
    order = []
    for s in range(g.num_vertices):
        if seen >> s & 1:
            continue
        seen |= 1 << s
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in iter_bits(g.adjacency[v] & ~seen):
                seen |= 1 << w
                queue.append(w)
    return order


def _relabelled_masks(g: Graph, order: Sequence[int]) -> list[int]:
    pos = [0] * g.num_vertices
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.num_vertices
    for v in range(g.num_vertices):
        adj[pos[v]] = sum(1 << pos[w] for w in iter_bits(g.adjacency[v]))
    return adj


# -- perfect matchings ------------------------------------------------------

def count_perfect_matchings(g: Graph) -> int:
    """Number of perfect matchings; 0 for an odd number of vertices."""
    n = g.num_vertices
    if n % 2:
        return 0
    adj = _relabelled_masks(g, _bfs_order(g))
    memo: dict[int, int] = {0: 1}

    def rec(free: int) -> int:
        if free in memo:
            return memo[free]
        low = free & -free
        v = low.bit_length() - 1
        rest = free ^ low
        total = 0
        for w in iter_bits(adj[v] & rest):
            total += rec(rest & ~(1 << w))
        memo[free] = total
        return total

    return rec((1 << n) - 1)


# -- 2-factors ---------------------------------------------------------------

def count_two_factors(g: Graph) -> int:
    """Number of spanning subgraphs in which every vertex has degree 2."""
    n = g.num_vertices
    if n == 0:
        return 1
    if any(d < 2 for d in g.degrees()):
        return 0
    order = _bfs_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    edges = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges)
    # order by the later endpoint so vertices are closed off early
    edges.sort(key=lambda e: (e[1], e[0]))
    deg = [0] * n
    left = [0] * n
    for u, v in edges:
        left[u] += 1
        left[v] += 1
    m = len(edges)

    def rec(i: int) -> int:
        if i == m:
            return 1
        u, v = edges[i]
        left[u] -= 1
        left[v] -= 1
        total = 0
        if deg[u] < 2 and deg[v] < 2:
            deg[u] += 1
            deg[v] += 1
            if deg[u] + left[u] >= 2 and deg[v] + left[v] >= 2:
                total += rec(i + 1)
            deg[u] -= 1
            deg[v] -= 1
        if deg[u] + left[u] >= 2 and deg[v] + left[v] >= 2:
            total += rec(i + 1)
        left[u] += 1
        left[v] += 1
        return total

    return rec(0)


# -- cycles --------------------------------------------------------------------

def fundamental_cycles(g: Graph) -> list[int]:
    """Edge masks of the fundamental cycles of a BFS spanning tree."""
    if len(components(g)) > 1:
        raise NotConnectedError("cycle space enumeration needs a connected graph")
    n = g.num_vertices
    if n == 0:
        return []
    parent = [-1] * n
    parent_edge = [0] * n
    depth = [0] * n
    seen = 1
    queue = deque([0])
    tree = 0
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adjacency[v] & ~seen):
            seen |= 1 << w
            parent[w] = v
            depth[w] = depth[v] + 1
            eid = g.edge_id(v, w)
            parent_edge[w] = 1 << eid
            tree |= 1 << eid
            queue.append(w)
    basis = []
    for eid, (u, v) in enumerate(g.edges):
        if tree >> eid & 1:
            continue
        mask = 1 << eid
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            mask ^= parent_edge[u]
            u = parent[u]
        basis.append(mask)
    return basis


def count_cycles(g: Graph) -> int:
    """Number of simple cycles, by walking the whole cycle space.

    Every nonzero element of the cycle space is visited once in Gray-code
    order; it is a cycle exactly when it is 2-regular and connected.
    """
    basis = fundamental_cycles(g)
    r = len(basis)
    if r > MAX_CYCLE_RANK:
        raise CyclomaticTooLargeError(f"cyclomatic number {r} exceeds {MAX_CYCLE_RANK}")
    ends = g.edges
    inc = g.incident_edges
    count = 0
    current = 0
    for step in range(1, 1 << r):
        current ^= basis[(step & -step).bit_length() - 1]
        # walk from one edge; a single cycle is traced out completely
        first = current & -current
        u, v = ends[first.bit_length() - 1]
        start = u
        prev_edge = first
        length = 1
        ok = True
        while v != start:
            nxt = inc[v] & current & ~prev_edge
            if nxt.bit_count() != 1:
                ok = False
                break
            a, b = ends[nxt.bit_length() - 1]
            v = b if a == v else a
            prev_edge = nxt
            length += 1
        if ok and length == current.bit_count() and (inc[start] & current).bit_count() == 2:
            count += 1
    return count


def count_cycles_dfs(g: Graph) -> int:
    """Simple cycles by depth-first path extension; independent oracle.

    Each cycle is rooted at its smallest vertex and traced in both
    directions, hence the final halving.
    """
    n = g.num_vertices
    adj = g.adjacency
    total = 0
    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        stack = [(s, 1 << s, 1)]
        while stack:
            v, visited, length = stack.pop()
            if length >= 3 and adj[v] >> s & 1:
                total += 1
            for w in iter_bits(adj[v] & allowed & ~visited):
                stack.append((w, visited | (1 << w), length + 1))
    return total // 2


# -- coloring sum ----------------------------------------------------------------

def _require_cubic(g: Graph) -> None:
    if not is_cubic(g):
        raise NotCubicError("formula is stated for cubic graphs only")
    if g.num_edges > MAX_COLORING_EDGES:
        raise EdgeCountTooLargeError(f"{g.num_edges} edges exceeds {MAX_COLORING_EDGES}")


def homogeneous_histogram(g: Graph, chunk_bits: int = 20) -> list[int]:
    """``hist[k]`` = number of edge 2-colorings with exactly k homogeneous vertices.

    Colorings are integers whose bit ``i`` is the state of edge ``i``; the
    range is processed in contiguous blocks.
    """
    _require_cubic(g)
    m = g.num_edges
    masks = [np.uint32(x) for x in g.incident_edges]
    hist = np.zeros(g.num_vertices + 1, dtype=np.int64)
    block = 1 << min(m, chunk_bits)
    for start in range(0, 1 << m, block):
        c = np.arange(start, start + block, dtype=np.uint32)
        hom = np.zeros(block, dtype=np.uint8)
        for mask in masks:
            part = c & mask
            hom += (part == 0) | (part == mask)
        hist += np.bincount(hom, minlength=g.num_vertices + 1)
    return [int(x) for x in hist]


def coloring_sum(g: Graph) -> int:
    """Sum over all edge 2-colorings of (-3) ** (number of homogeneous vertices)."""
    return sum(c * (-3) ** k for k, c in enumerate(homogeneous_histogram(g)))


def coloring_formula_count(g: Graph) -> int:
    """Perfect matchings as the average of (-3)^(homogeneous vertices)."""
    s = coloring_sum(g)
    q, rem = divmod(s, 1 << g.num_edges)
    if rem:
        raise NotDivisibleError(f"coloring sum {s} not divisible by 2^{g.num_edges}")
    return q


# -- tensor network --------------------------------------------------------------

# vertex weights indexed by the number of incident edges in state 0
COMPUTATIONAL_WEIGHTS = (0, 0, 1, 0)
# in the |x>,|y> basis, scaled by 2*sqrt(2): state 0 is x, state 1 is y
XY_WEIGHTS = (3, -1, -1, 3)


def contract_network(g: Graph, vertex_weights: Sequence[int] | Mapping[int, int]) -> int:
    """Contract the edge-copy / vertex-weight network of a cubic graph.

    Every edge carries the diagonal element sum_s |s>|s>, so both endpoints
    see the same state; each vertex contributes ``vertex_weights[z]`` where
    ``z`` is the number of its edges in state 0.  Vertices are absorbed in BFS
    order and only the states of edges crossing the frontier are kept.
    """
    _require_cubic(g)
    w = [vertex_weights[z] for z in range(4)]
    order = _bfs_order(g)
    done = 0
    frontier: list[int] = []  # open edge ids, aligned with state tuples
    table: dict[tuple[int, ...], int] = {(): 1}
    for v in order:
        closing = []
        opening = []
        for u in iter_bits(g.adjacency[v]):
            eid = g.edge_id(u, v)
            (closing if done >> u & 1 else opening).append(eid)
        idx = [frontier.index(e) for e in closing]
        keep = [i for i in range(len(frontier)) if i not in idx]
        k = len(opening)
        new_table: dict[tuple[int, ...], int] = {}
        for key, val in table.items():
            zeros_closed = sum(1 for i in idx if key[i] == 0)
            base = tuple(key[i] for i in keep)
            for bits in range(1 << k):
                states = tuple((bits >> j) & 1 for j in range(k))
                wt = w[zeros_closed + states.count(0)]
                if wt == 0:
                    continue
                nk = base + states
                new_table[nk] = new_table.get(nk, 0) + val * wt
        table = new_table
        frontier = [frontier[i] for i in keep] + opening
        done |= 1 << v
    return table.get((), 0)


class ScaledValue(NamedTuple):
    numerator: int
    scale_log2: int  # value = numerator / 2 ** scale_log2


def tensor_contraction_scaled(g: Graph, basis: str = "computational") -> ScaledValue:
    if basis == "computational":
        return ScaledValue(contract_network(g, COMPUTATIONAL_WEIGHTS), 0)
    if basis == "xy":
        # (2*sqrt(2)) ** |V| == 2 ** (3|V|/2); |V| is even for cubic graphs
        return ScaledValue(contract_network(g, XY_WEIGHTS), 3 * g.num_vertices // 2)
    raise ValueError(f"unknown basis {basis!r}")


def tensor_contraction_count(g: Graph, basis: str = "computational") -> int:
    num, scale = tensor_contraction_scaled(g, basis)
    q, rem = divmod(num, 1 << scale)
    if rem:
        raise NotDivisibleError(f"contraction {num} / 2^{scale} is not an integer")
    return q


# -- per-graph report ------------------------------------------------------------

class CountReport(NamedTuple):
    canonical: str
    num_vertices: int
    pm_count: int
    two_factor_count: Optional[int]
    cycle_count: Optional[int]
    coloring_formula_count: Optional[int]
    bound_6_pow: bool
    bound_m_n: Optional[bool]


def count_report(
    g: Graph,
    *,
    two_factors: bool = True,
    cycles: bool = False,
    formula: bool = False,
    canonical: str = "",
) -> CountReport:
    from .sequences import m_value

    pm = count_perfect_matchings(g)
    n = g.num_vertices // 2
    cubic = is_cubic(g)
    return CountReport(
        canonical=canonical,
        num_vertices=g.num_vertices,
        pm_count=pm,
        two_factor_count=count_two_factors(g) if two_factors else None,
        cycle_count=count_cycles(g) if cycles else None,
        coloring_formula_count=coloring_formula_count(g) if formula and cubic else None,
        bound_6_pow=pm**3 <= 6**n,
        bound_m_n=pm <= m_value(n) if cubic and n >= 2 else None,
    )
