"""Canonical labelling by branch and bound over vertex orderings.

The code of a labelled graph is its upper-triangle adjacency read column by
column (column ``p`` holds the bits ``a[0][p] .. a[p-1][p]``).  The canonical
form is the lexicographically largest code over all relabelings.  Because a
prefix of columns only depends on the first vertices placed, the search
builds the ordering one position at a time and only follows the vertices
whose column ties for the best value.  Every complete ordering that reaches
the optimal code is an automorphism composed with one fixed canonical
labelling, so counting them yields ``|Aut(G)|`` for free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, iter_bits


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key; ``orbit_size`` is the automorphism group order."""

    bytes: bytes
    orbit_size: int = field(default=0, compare=False)

    def hex(self) -> str:
        return self.bytes.hex()


def _pack(cols: Sequence[int], n: int) -> bytes:
    code = 0
    for p in range(1, n):
        code = (code << p) | (cols[p] >> (n - p))
    nbits = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((nbits + 7) // 8, "big")


def _search(adj: Sequence[int], n: int):
    nbrs = [list(iter_bits(m)) for m in adj]
    colbits = [0] * n
    used = [False] * n
    perm = [0] * n
    cols = [0] * n
    best: list[int] = []
    best_perm: list[int] = []
    count = 0

    def rec(p: int, greater: bool) -> None:
        nonlocal best, best_perm, count
        if p == n:
            if greater or not best:
                best, best_perm, count = cols[:], perm[:], 1
            else:
                count += 1
            return
        top = max(colbits[v] for v in range(n) if not used[v])
        if best and not greater:
            if top < best[p]:
                return
            greater = top > best[p]
        bit = 1 << (n - 1 - p)
        for v in range(n):
            if used[v] or colbits[v] != top:
                continue
            used[v] = True
            perm[p] = v
            cols[p] = top
            touched = [w for w in nbrs[v] if not used[w]]
            for w in touched:
                colbits[w] |= bit
            rec(p + 1, greater)
            for w in touched:
                colbits[w] &= ~bit
            used[v] = False
            # a greater branch always reaches a leaf and becomes the new best
            greater = False

    rec(0, False)
    return best, best_perm, count


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, list[int]]:
    """Return the canonical form and ``order`` with ``order[pos] = vertex``."""
    n = g.num_vertices
    if n == 0:
        return CanonicalForm(bytes([0]), 1), []
    best, order, count = _search(g.adjacency, n)
    return CanonicalForm(_pack(best, n), count), order


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonically labelled copy of ``g``."""
    _, order = canonical_labeling(g)
    perm = [0] * g.num_vertices
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def _degree_signature(g: Graph) -> tuple:
    # cheap invariant: multiset of (degree, sorted neighbour degrees)
    deg = g.degrees()
    return tuple(sorted((deg[v], tuple(sorted(deg[w] for w in iter_bits(g.adjacency[v])))) for v in range(g.num_vertices)))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.num_vertices != h.num_vertices or g.num_edges != h.num_edges:
        return False
    if _degree_signature(g) != _degree_signature(h):
        return False
    return canonical_form(g) == canonical_form(h)


def own_code(adj: Sequence[int], n: int) -> list[int]:
    """Column values of the identity labelling, in the search's bit layout."""
    cols = [0] * n
    for p in range(n):
        c = 0
        for j in iter_bits(adj[p] & ((1 << p) - 1)):
            c |= 1 << (n - 1 - j)
        cols[p] = c
    return cols


def is_canonical_code(adj: Sequence[int], n: int) -> bool:
    """True iff the identity labelling already attains the maximal code.

    Used as the orderly-generation acceptance test: it aborts as soon as some
    relabeling beats the current code.
    """
    own = own_code(adj, n)
    nbrs = [list(iter_bits(adj[v])) for v in range(n)]
    colbits = [0] * n
    used = [False] * n

    def rec(p: int) -> bool:
        if p == n:
            return True
        top = 0
        for v in range(n):
            if not used[v] and colbits[v] > top:
                top = colbits[v]
        if top > own[p]:
            return False
        if top < own[p]:
            return True
        bit = 1 << (n - 1 - p)
        for v in range(n):
            if used[v] or colbits[v] != top:
                continue
            used[v] = True
            touched = [w for w in nbrs[v] if not used[w]]
            for w in touched:
                colbits[w] |= bit
            ok = rec(p + 1)
            for w in touched:
                colbits[w] &= ~bit
            used[v] = False
            if not ok:
                return False
        return True

    return rec(0)
