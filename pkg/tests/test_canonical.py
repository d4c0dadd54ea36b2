import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cubiccensus.canonical import are_isomorphic, canonical_form, canonical_graph
from cubiccensus.families import cube, k4, k33, m_graph, moebius, prism
from cubiccensus.graph import build_graph
from oracles import brute_canonical, random_permutation


def _code_bits(form) -> bytes:
    n = form.bytes[0]
    nbits = n * (n - 1) // 2
    code = int.from_bytes(form.bytes[1:], "big")
    return bytes((code >> (nbits - 1 - i)) & 1 for i in range(nbits))


def test_matches_brute_force_on_small_graphs():
    rng = random.Random(7)
    graphs = [k4(), k33(), cube(), prism(3), build_graph(5, [(0, 1), (1, 2), (2, 3)])]
    for _ in range(30):
        n = rng.randint(2, 7)
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        graphs.append(build_graph(n, rng.sample(pairs, rng.randint(0, len(pairs)))))
    for g in graphs:
        assert _code_bits(canonical_form(g)) == brute_canonical(g)


def test_automorphism_counts():
    assert canonical_form(k4()).orbit_size == 24
    assert canonical_form(k33()).orbit_size == 72
    assert canonical_form(cube()).orbit_size == 48
    assert canonical_form(prism(3)).orbit_size == 12


def test_canonical_graph_is_fixed_point():
    g = m_graph(7)
    c = canonical_graph(g)
    assert canonical_form(c) == canonical_form(g)
    assert canonical_graph(c) == c


def test_are_isomorphic_distinguishes_cubic_graphs_on_8_vertices():
    # M_4 is the cube; the Moebius ladder on 8 vertices is a different graph
    assert are_isomorphic(m_graph(4), cube())
    assert not are_isomorphic(cube(), moebius(8))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 9), st.floats(0.1, 0.9))
def test_relabel_invariance(seed, n, density):
    rng = random.Random(seed)
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < density]
    g = build_graph(n, edges)
    h = g.relabel(random_permutation(rng, n))
    assert canonical_form(g) == canonical_form(h)
    assert canonical_form(g).orbit_size == canonical_form(h).orbit_size
