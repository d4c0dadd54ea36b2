"""Isomorph-free generation of connected cubic graphs and census-wide checks.

Generation is orderly in the Read/Faradzev sense.  A graph is canonical when
its column-wise adjacency code is the largest over all relabelings (see
:mod:`cubiccensus.canonical`).  Deleting the last vertex of a canonical graph
leaves a canonical graph, so canonical graphs are grown one vertex at a time
and any non-canonical intermediate is discarded.  For connected graphs the
maximal code also forces a breadth-first shape: the new vertex is always
attached to the smallest vertex that still lacks neighbours, and its column
never exceeds the previous one.  Both facts are used for pruning.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from .canonical import CanonicalForm, _pack, canonical_form, is_canonical_code, own_code
from .counting import (
    CountReport,
    coloring_formula_count,
    count_cycles,
    count_perfect_matchings,
    count_report,
    count_two_factors,
    tensor_contraction_count,
)
from .errors import ParameterOutOfRangeError
from .families import m_graph, mc_graph
from .graph import Graph, bipartition, double, find_bridges, induced_without
from .sequences import m_inequality_rows, m_value, mc_cycle_formula, psi_table

MIN_VERTICES = 4
MAX_VERTICES = 16
SPLIT_DEPTH = 8


class _State(NamedTuple):
    k: int
    adj: tuple[int, ...]
    deg: tuple[int, ...]
    color: tuple[int, ...]
    deficit: int


def _lex_key(mask: int, n: int) -> int:
    key = 0
    while mask:
        low = mask & -mask
        key |= 1 << (n - low.bit_length())
        mask ^= low
    return key


def _expand(n: int, bipartite_only: bool, state: _State, stop: Optional[int]):
    """Depth-first growth from ``state``.

    Yields finished adjacency tuples, or the intermediate states reached at
    ``stop`` vertices when ``stop`` is given.
    """
    adj = list(state.adj) + [0] * (n - state.k)
    deg = list(state.deg) + [0] * (n - state.k)
    color = list(state.color) + [0] * (n - state.k)
    out = []

    def rec(k: int, deficit: int) -> None:
        if stop is not None and k == stop:
            out.append(_State(k, tuple(adj[:k]), tuple(deg[:k]), tuple(color[:k]), deficit))
            return
        if k == n:
            if deficit == 0:
                out.append(tuple(adj))
            return
        i = next((v for v in range(k) if deg[v] < 3), None)
        if i is None:
            return
        free = [v for v in range(i + 1, k) if deg[v] < 3]
        prev = _lex_key(adj[k - 1] & ((1 << (k - 1)) - 1), n) if k >= 2 else None
        left = n - k - 1
        choices = [()] + [(a,) for a in free]
        choices += [(a, b) for j, a in enumerate(free) for b in free[j + 1:]]
        for rest in choices:
            nbrs = (i,) + rest
            s = len(nbrs)
            d2 = deficit - s + (3 - s)
            if left == 0:
                if d2:
                    continue
            elif d2 <= 0 or d2 > 3 * left or (d2 + left) % 2:
                continue
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            if prev is not None and _lex_key(mask & ~(1 << (k - 1)), n) > prev:
                continue
            if bipartite_only:
                if any(color[v] != color[i] for v in nbrs):
                    continue
                color[k] = 1 - color[i]
            for v in nbrs:
                adj[v] |= 1 << k
                deg[v] += 1
            adj[k] = mask
            deg[k] = s
            if is_canonical_code(adj, k + 1):
                rec(k + 1, d2)
            for v in nbrs:
                adj[v] &= ~(1 << k)
                deg[v] -= 1
            adj[k] = 0
            deg[k] = 0

    rec(state.k, state.deficit)
    return out


def _subtree(args) -> list[tuple[int, ...]]:
    n, bipartite_only, state = args
    return _expand(n, bipartite_only, state, None)


def _check_order(num_vertices: int) -> None:
    if num_vertices % 2 or not MIN_VERTICES <= num_vertices <= MAX_VERTICES:
        raise ParameterOutOfRangeError(
            f"vertex count must be even and within {MIN_VERTICES}..{MAX_VERTICES}, got {num_vertices}"
        )


def default_jobs() -> int:
    return int(os.environ.get("CUBIC_CENSUS_JOBS", "1"))


_CACHE: dict[tuple[int, bool], tuple[Graph, ...]] = {}


def _generate(n: int, bipartite_only: bool, jobs: int) -> tuple[Graph, ...]:
    root = _State(1, (0,), (0,), (0,), 3)
    if jobs > 1 and n > SPLIT_DEPTH:
        tasks = [(n, bipartite_only, s) for s in _expand(n, bipartite_only, root, SPLIT_DEPTH)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = [adj for part in pool.map(_subtree, tasks) for adj in part]
    else:
        found = _expand(n, bipartite_only, root, None)
    keyed = sorted((_pack(own_code(adj, n), n), adj) for adj in found)
    return tuple(Graph.from_masks(adj) for _, adj in keyed)


def generate_connected_cubic(num_vertices: int, bipartite_only: bool = False, jobs: int = 1) -> Iterable[Graph]:
    """One canonically labelled representative per isomorphism class.

    Graphs come out in ascending canonical-form order whatever ``jobs`` is;
    results are memoised per (order, bipartite_only).
    """
    _check_order(num_vertices)
    key = (num_vertices, bool(bipartite_only))
    if key not in _CACHE:
        _CACHE[key] = _generate(num_vertices, bool(bipartite_only), jobs)
    return iter(_CACHE[key])


@dataclass(frozen=True)
class CensusRecord:
    canonical: CanonicalForm
    num_vertices: int
    bipartite: bool
    report: CountReport
    extremal: bool
    graph: Graph = field(compare=False, repr=False)


def census(
    num_vertices: int,
    bipartite_only: bool = False,
    jobs: int = 1,
    *,
    cycles: bool = False,
    formula: bool = False,
) -> list[CensusRecord]:
    """Counts for every class, sorted by canonical form."""
    graphs = list(generate_connected_cubic(num_vertices, bipartite_only, jobs))
    n = num_vertices // 2
    best = m_value(n)
    records = []
    for g in graphs:
        form = canonical_form(g)
        rep = count_report(g, cycles=cycles, formula=formula, canonical=form.hex())
        records.append(CensusRecord(form, num_vertices, bipartition(g) is not None, rep, rep.pm_count == best, g))
    return records


class ExtremalReport(NamedTuple):
    max_count: int
    extremal_forms: list[CanonicalForm]
    matches_m_graph: bool
    unique: bool


def extremal_report(num_vertices: int, bipartite_only: bool = False, jobs: int = 1) -> ExtremalReport:
    counts = [(count_perfect_matchings(g), g) for g in generate_connected_cubic(num_vertices, bipartite_only, jobs)]
    if not counts:
        return ExtremalReport(0, [], False, False)
    top = max(c for c, _ in counts)
    forms = sorted(canonical_form(g) for c, g in counts if c == top)
    target = canonical_form(m_graph(num_vertices // 2))
    return ExtremalReport(top, forms, forms == [target], len(forms) == 1)


# -- verification harness -----------------------------------------------------


@dataclass
class Check:
    name: str
    checked: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return self.checked - self.passed

    def record(self, ok: bool, what: str) -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(what)


@dataclass
class VerificationSummary:
    checks: dict[str, Check] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def check(self, name: str) -> Check:
        if name not in self.checks:
            self.checks[name] = Check(name)
        return self.checks[name]

    @property
    def checked(self) -> int:
        return sum(c.checked for c in self.checks.values())

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks.values())

    @property
    def failed(self) -> int:
        return sum(c.failed for c in self.checks.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def merge(self, other: "VerificationSummary") -> "VerificationSummary":
        for name, c in other.checks.items():
            mine = self.check(name)
            mine.checked += c.checked
            mine.passed += c.passed
            mine.failures.extend(c.failures)
        self.notes.extend(other.notes)
        return self

    def rows(self) -> list[dict]:
        return [
            {"assertion": c.name, "checked": c.checked, "passed": c.passed, "failed": c.failed,
             "failures": c.failures[:20]}
            for c in self.checks.values()
        ]


def _orders(n_max: int, bipartite_only: bool) -> range:
    if not 2 <= n_max <= MAX_VERTICES // 2:
        raise ParameterOutOfRangeError(f"n_max must be within 2..{MAX_VERTICES // 2}, got {n_max}")
    return range(3 if bipartite_only else 2, n_max + 1)


def verify_extremal(n_max: int, bipartite_only: bool = False, jobs: int = 1,
                    injected: Iterable[Graph] = ()) -> VerificationSummary:
    """pm <= m_n with equality exactly at M_n; bipartite members are bridgeless
    and lose at most two components when an edge's ends are removed.

    ``injected`` graphs are claimed to be extremal; a harness self-test."""
    summary = VerificationSummary()
    for n in _orders(n_max, bipartite_only):
        best = m_value(n)
        target = canonical_form(m_graph(n))
        maximisers = 0
        for g in generate_connected_cubic(2 * n, bipartite_only, jobs):
            pm = count_perfect_matchings(g)
            label = f"{2 * n}v:{canonical_form(g).hex()}"
            summary.check("pm_le_m_n").record(pm <= best, label)
            is_target = canonical_form(g) == target
            summary.check("equality_iff_M_n").record((pm == best) == is_target, label)
            maximisers += pm == best
            if bipartition(g) is not None:
                summary.check("bipartite_bridgeless").record(not find_bridges(g), label)
                worst = max(induced_without(g, e).component_count for e in g.edges)
                summary.check("bipartite_edge_removal_le_2_components").record(worst <= 2, label)
        summary.check("unique_maximiser").record(maximisers == 1, f"{2 * n}v: {maximisers} maximisers")
    for g in injected:
        n = g.num_vertices // 2
        ok = count_perfect_matchings(g) == m_value(n) and canonical_form(g) == canonical_form(m_graph(n))
        summary.check("injected_extremal_claim").record(ok, f"injected {g.num_vertices}v graph")
    return summary


def verify_coloring_formula(n_max: int, bipartite_only: bool = False, jobs: int = 1,
                            max_census_vertices: int = 12) -> VerificationSummary:
    """Coloring-sum count equals the perfect matching count.

    Applied to census graphs up to ``max_census_vertices`` vertices and to
    M_n for every n up to ``n_max``."""
    summary = VerificationSummary()
    chk = summary.check("coloring_formula_eq_pm")
    for n in _orders(n_max, bipartite_only):
        if 2 * n <= max_census_vertices:
            for g in generate_connected_cubic(2 * n, bipartite_only, jobs):
                chk.record(coloring_formula_count(g) == count_perfect_matchings(g),
                           f"{2 * n}v:{canonical_form(g).hex()}")
        g = m_graph(n)
        chk.record(coloring_formula_count(g) == count_perfect_matchings(g), f"M_{n}")
    if 2 * n_max > max_census_vertices:
        summary.notes.append(f"census coloring sums limited to <= {max_census_vertices} vertices")
    return summary


def verify_bounds(n_max: int, bipartite_only: bool = False, jobs: int = 1) -> VerificationSummary:
    """pm^3 <= 6^n and pm(G)^2 <= pm(D(G)) over the census."""
    summary = VerificationSummary()
    for n in _orders(n_max, bipartite_only):
        for g in generate_connected_cubic(2 * n, bipartite_only, jobs):
            pm = count_perfect_matchings(g)
            label = f"{2 * n}v:{canonical_form(g).hex()}"
            summary.check("alon_friedland_pm3_le_6n").record(pm**3 <= 6**n, label)
            doubled = count_perfect_matchings(double(g))
            summary.check("doubling_pm2_le_pm_double").record(pm * pm <= doubled, label)
            if pm * pm == doubled:
                summary.notes.append(f"doubling equality at {label}")
    return summary


def verify_theorems(n_max: int, bipartite_only: bool = False, jobs: int = 1,
                    injected: Iterable[Graph] = (), max_formula_vertices: int = 12) -> VerificationSummary:
    """All census-wide assertions up to 2 * n_max vertices, as one summary."""
    summary = verify_extremal(n_max, bipartite_only, jobs, injected)
    summary.merge(verify_coloring_formula(n_max, bipartite_only, jobs, max_formula_vertices))
    summary.merge(verify_bounds(n_max, bipartite_only, jobs))
    return summary


def verify_tensor_identity(n_max: int, bipartite_only: bool = False, jobs: int = 1,
                           max_census_vertices: int = 12) -> VerificationSummary:
    """Both tensor-network bases reproduce the 2-factor count."""
    summary = VerificationSummary()
    graphs = []
    for n in _orders(n_max, bipartite_only):
        if 2 * n <= max_census_vertices:
            graphs += [(f"{2 * n}v:{canonical_form(g).hex()}", g)
                       for g in generate_connected_cubic(2 * n, bipartite_only, jobs)]
        graphs.append((f"M_{n}", m_graph(n)))
    for label, g in graphs:
        fac = count_two_factors(g)
        summary.check("tensor_computational_eq_2f").record(tensor_contraction_count(g, "computational") == fac, label)
        summary.check("tensor_xy_eq_2f").record(tensor_contraction_count(g, "xy") == fac, label)
    return summary


def verify_m_inequalities(n_max: int = 40) -> VerificationSummary:
    summary = VerificationSummary()
    for row in m_inequality_rows(n_max):
        summary.check(f"clause_{row.clause}").record(row.holds, f"{row.clause}{row.params}: {row.lhs} {row.relation} {row.rhs}")
        if row.equality:
            summary.notes.append(f"equality at clause {row.clause} {row.params}")
    return summary


def verify_cycle_bounds(k_max: int = 14) -> VerificationSummary:
    """Crossed-rung prism cycle counts against their closed form, and the
    resulting lower bounds against the known upper ceiling."""
    summary = VerificationSummary()
    for k in range(3, k_max + 1):
        summary.check("mc_cycles_eq_formula").record(count_cycles(mc_graph(k)) == mc_cycle_formula(k), f"k={k}")
    for row in psi_table(k_max + 1):
        r = row.r
        summary.check("psi_eq_mc_cycles").record(row.psi_lower == count_cycles(mc_graph(r - 1)), f"r={r}")
        summary.check("psi_below_15_16_ceiling").record(16 * row.psi_lower < row.ceiling_16ths, f"r={r}")
        if r >= 6:
            summary.check("psi_above_half_power").record(row.psi_lower > row.half_power, f"r={r}")
    return summary
