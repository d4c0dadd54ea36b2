# # Graphs with the most perfect matchings
#
# Among connected cubic graphs on 2n vertices, the ladder family M_n carries
# the most perfect matchings. Its counts follow the Fibonacci numbers from
# n = 6 onwards.

from cubiccensus import count_perfect_matchings, fibonacci, m_graph, m_value
from cubiccensus.graph import classify

# ## Small members
#
# M_2..M_5 are K4, K33, the cube and the Moebius ladder on 10 vertices.

for n in range(2, 6):
    g = m_graph(n)
    print(n, g, count_perfect_matchings(g), classify(g).is_bipartite)

# ## The Fibonacci regime

for n in range(6, 15):
    pm = count_perfect_matchings(m_graph(n))
    print(f"n={n:2d}  pm={pm:4d}  4*f(n-1)={4 * fibonacci(n - 1):4d}  m_n={m_value(n)}")

# Each extra rung adds the two previous counts:

pms = [count_perfect_matchings(m_graph(n)) for n in range(6, 15)]
print(all(pms[i] == pms[i - 1] + pms[i - 2] for i in range(2, len(pms))))
