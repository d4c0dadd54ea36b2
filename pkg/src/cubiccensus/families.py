"""Constructors for the named graph families, with fixed vertex numbering.

Numbering conventions
---------------------
m_graph(n), n >= 6
    0..5 left cap, 6..2n-7 the rungs (bottom rail even, top rail odd),
    2n-6..2n-1 right cap.  In each cap the first two vertices are the rail
    attachments (bottom, top); the cap is K_{3,3} minus the edge joining them.
mc_graph(k)
    x_i is ``i - 1`` and y_i is ``k + i - 1`` for 1 <= i <= k.
moebius(2k)
    the cycle 0..2k-1 plus chords i -- i+k.
prism(k)
    outer cycle 0..k-1, inner cycle k..2k-1, rungs i -- k+i.
petersen()
    outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- 5+i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ParameterOutOfRangeError
from .graph import Graph, build_graph


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def k4() -> Graph:
    return complete_graph(4)


def k33() -> Graph:
    return build_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])


def k44_minus_matching() -> Graph:
    return build_graph(8, [(i, 4 + j) for i in range(4) for j in range(4) if i != j])


def cube() -> Graph:
    """The 3-dimensional hypercube on bit strings 0..7."""
    return build_graph(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterOutOfRangeError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def moebius(num_vertices: int) -> Graph:
    if num_vertices < 6 or num_vertices % 2:
        raise ParameterOutOfRangeError(f"Moebius ladder needs an even order >= 6, got {num_vertices}")
    k = num_vertices // 2
    edges = [(i, (i + 1) % num_vertices) for i in range(num_vertices)]
    edges += [(i, i + k) for i in range(k)]
    return build_graph(num_vertices, edges)


def prism(k: int) -> Graph:
    if k < 3:
        raise ParameterOutOfRangeError(f"prism needs k >= 3, got {k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return build_graph(2 * k, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return build_graph(10, edges)


def _cap_edges(base: int) -> list[tuple[int, int]]:
    # attachments: bottom = base, top = base+1; inner p, q, r, s = base+2..5
    b, t, p, q, r, s = range(base, base + 6)
    return [(b, p), (b, r), (t, q), (t, s), (p, q), (r, s), (p, s), (q, r)]


def m_graph(n: int) -> Graph:
    """The extremal graph on 2n vertices."""
    if n < 2:
        raise ParameterOutOfRangeError(f"M_n needs n >= 2, got {n}")
    if n == 2:
        return k4()
    if n == 3:
        return k33()
    if n == 4:
        return k44_minus_matching()
    if n == 5:
        return moebius(10)
    rungs = n - 6
    right = 2 * n - 6
    edges = _cap_edges(0) + _cap_edges(right)
    bottom = [0] + [6 + 2 * j for j in range(rungs)] + [right]
    top = [1] + [7 + 2 * j for j in range(rungs)] + [right + 1]
    for rail in (bottom, top):
        edges += list(zip(rail, rail[1:]))
    edges += [(6 + 2 * j, 7 + 2 * j) for j in range(rungs)]
    return build_graph(2 * n, edges)


def mc_graph(k: int) -> Graph:
    """Two k-cycles x and y joined by crossed rungs (plus x_k y_k for odd k)."""
    if k < 3:
        raise ParameterOutOfRangeError(f"MC_k needs k >= 3, got {k}")

    def x(i):
        return (i - 1) % k

    def y(i):
        return k + (i - 1) % k

    edges = [(x(i), x(i + 1)) for i in range(1, k + 1)]
    edges += [(y(i), y(i + 1)) for i in range(1, k + 1)]
    for i in range(1, k // 2 + 1):
        edges += [(x(2 * i - 1), y(2 * i)), (x(2 * i), y(2 * i - 1))]
    if k % 2:
        edges.append((x(k), y(k)))
    return build_graph(2 * k, edges)


KINDS = ("Mn", "MCk", "K4", "K33", "CUBE", "MOEBIUS", "PRISM", "PETERSEN")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    parameter: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterOutOfRangeError(f"unknown family {self.kind!r}; choose from {', '.join(KINDS)}")
        needs = self.kind in ("Mn", "MCk", "MOEBIUS", "PRISM")
        if needs and self.parameter is None:
            raise ParameterOutOfRangeError(f"family {self.kind} needs a parameter")


def named_graph(spec: FamilySpec) -> Graph:
    p = spec.parameter
    builders = {
        "Mn": lambda: m_graph(p),
        "MCk": lambda: mc_graph(p),
        "K4": k4,
        "K33": k33,
        "CUBE": cube,
        "MOEBIUS": lambda: moebius(p),
        "PRISM": lambda: prism(p),
        "PETERSEN": petersen,
    }
    return builders[spec.kind]()
