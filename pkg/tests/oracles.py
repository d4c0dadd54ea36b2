"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from cubiccensus.graph import Graph, build_graph


def brute_perfect_matchings(g: Graph) -> int:
    n = g.num_vertices
    if n % 2:
        return 0
    full = (1 << n) - 1
    total = 0
    for subset in itertools.combinations(g.edges, n // 2):
        covered = 0
        for u, v in subset:
            covered |= (1 << u) | (1 << v)
        total += covered == full
    return total


def brute_two_factors(g: Graph) -> int:
    n = g.num_vertices
    total = 0
    for subset in itertools.combinations(g.edges, n):
        deg = [0] * n
        for u, v in subset:
            deg[u] += 1
            deg[v] += 1
        total += all(d == 2 for d in deg)
    return total


def dfs_cycles(g: Graph) -> int:
    """Each cycle is found from its smallest vertex, once per direction."""
    n = g.num_vertices
    nbrs = [list(g.neighbors(v)) for v in range(n)]
    found = 0

    def walk(start, v, seen, length):
        nonlocal found
        for w in nbrs[v]:
            if w == start and length >= 3:
                found += 1
            elif w > start and not seen >> w & 1:
                walk(start, w, seen | 1 << w, length + 1)

    for s in range(n):
        walk(s, s, 1 << s, 1)
    return found // 2


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.edges)
    return h


def labelled_cubic_graphs(n: int):
    """Cubic graphs on ``n`` vertices, every isomorphism class at least once.

    Stubs are paired by always completing the lowest unsaturated vertex.
    Vertices with no edge yet are interchangeable, so only the smallest of
    them is ever tried as a new neighbour.
    """
    adj = [set() for _ in range(n)]

    def rec():
        u = next((v for v in range(n) if len(adj[v]) < 3), None)
        if u is None:
            yield build_graph(n, [(a, b) for a in range(n) for b in adj[a] if a < b])
            return
        fresh = next((v for v in range(n) if v != u and not adj[v]), None)
        for w in range(u + 1, n):
            if len(adj[w]) >= 3 or w in adj[u] or (not adj[w] and w != fresh):
                continue
            adj[u].add(w)
            adj[w].add(u)
            yield from rec()
            adj[u].discard(w)
            adj[w].discard(u)

    yield from rec()


def _invariant(g: Graph) -> tuple:
    """Sorted per-vertex profile of common-neighbour counts."""
    n = g.num_vertices
    return tuple(sorted(
        tuple(sorted(bin(g.adjacency[v] & g.adjacency[w]).count("1") for w in range(n) if w != v))
        for v in range(n)
    ))


def oracle_census(n: int) -> list[nx.Graph]:
    """Connected cubic classes on ``n`` vertices, deduplicated with VF2."""
    buckets: dict[tuple, list[nx.Graph]] = {}
    for g in labelled_cubic_graphs(n):
        h = to_nx(g)
        if not nx.is_connected(h):
            continue
        bucket = buckets.setdefault(_invariant(g), [])
        if not any(nx.is_isomorphic(h, r) for r in bucket):
            bucket.append(h)
    return [h for bucket in buckets.values() for h in bucket]


def brute_canonical(g: Graph) -> bytes:
    """Largest column-wise upper-triangle code over all n! labelings."""
    n = g.num_vertices
    best = None
    for perm in itertools.permutations(range(n)):
        bits = tuple(int(g.has_edge(perm[i], perm[j])) for j in range(1, n) for i in range(j))
        if best is None or bits > best:
            best = bits
    return bytes(best)


def random_connected_graph(rng: random.Random, max_rank: int, max_vertices: int = 14) -> Graph:
    """Random spanning tree plus up to ``max_rank`` extra edges."""
    n = rng.randint(1, max_vertices)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges = {tuple(sorted(e)) for e in edges}
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    rng.shuffle(pairs)
    edges |= set(pairs[: rng.randint(0, max_rank)])
    return build_graph(n, sorted(edges))


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm
