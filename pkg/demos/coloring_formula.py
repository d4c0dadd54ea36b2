# # Counting perfect matchings by coloring edges
#
# Sum (-3)^(homogeneous vertices) over all 2-colorings of the edges, divide by
# 2^|E|, and the result is the number of perfect matchings.

import numpy as np

from cubiccensus.counting import (
    coloring_formula_count,
    count_perfect_matchings,
    homogeneous_histogram,
    tensor_contraction_count,
)
from cubiccensus.families import k4, k33, m_graph, petersen

# ## The histogram for K4
#
# Entry k counts colorings with exactly k homogeneous vertices.

hist = np.array(homogeneous_histogram(k4()))
print(hist, hist.sum())
weights = np.array([(-3) ** k for k in range(len(hist))])
print(int(hist @ weights) // 2**6)

# ## The same identity on a few graphs

for name, g in [("K4", k4()), ("K33", k33()), ("Petersen", petersen()), ("M8", m_graph(8))]:
    print(name, coloring_formula_count(g), count_perfect_matchings(g))

# ## As a tensor network
#
# Two bases of vertex tensors give the same count.

for name, g in [("K4", k4()), ("Petersen", petersen())]:
    print(name, tensor_contraction_count(g, "computational"), tensor_contraction_count(g, "xy"))
