# # Cycle-rich cubic graphs
#
# The crossed-rung prisms MC_k have a closed-form cycle count, which gives a
# lower bound for the largest cycle count at cyclomatic number r = k + 1.

from cubiccensus.counting import count_cycles, count_cycles_dfs
from cubiccensus.families import mc_graph
from cubiccensus.graph import cyclomatic_number
from cubiccensus.sequences import mc_cycle_formula, psi_table

# ## Enumeration against the closed form

for k in range(3, 13):
    g = mc_graph(k)
    print(k, cyclomatic_number(g), count_cycles(g), mc_cycle_formula(k))

# The slow depth-first enumerator agrees on the small ones:

print([count_cycles_dfs(mc_graph(k)) for k in range(3, 9)])

# ## Lower bounds next to 2^(r-1) and (15/16) 2^r

for row in psi_table(16):
    print(f"r={row.r:2d}  psi>={row.psi_lower:6d}  2^(r-1)={row.half_power:6d}  ratio={row.psi_lower / 2**row.r:.4f}")
