# # An isomorph-free census of cubic graphs
#
# Generate every connected cubic graph up to 14 vertices, then look at the
# extremal graphs order by order.

from collections import Counter

from cubiccensus.canonical import canonical_form
from cubiccensus.families import m_graph, prism
from cubiccensus.search import census, extremal_report, generate_connected_cubic

# ## How many graphs?

for v in range(4, 15, 2):
    allg = len(list(generate_connected_cubic(v)))
    bip = len(list(generate_connected_cubic(v, bipartite_only=True)))
    print(f"{v:2d} vertices: {allg:4d} connected cubic, {bip:3d} bipartite")

# ## Distribution of perfect-matching counts on 10 vertices

records = census(10)
print(sorted(Counter(r.report.pm_count for r in records).items()))

# ## Who attains the maximum?

for v in range(4, 15, 2):
    rep = extremal_report(v)
    print(v, rep.max_count, len(rep.extremal_forms), rep.matches_m_graph)

# On 12 vertices the hexagonal prism ties with M_6:

rep = extremal_report(12)
print([f.hex() for f in rep.extremal_forms])
print(canonical_form(prism(6)).hex(), canonical_form(m_graph(6)).hex())
