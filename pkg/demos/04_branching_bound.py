"""
Branching factors and the leaf bound
====================================

Each branching rule removes ``t_i`` uncolored vertices in its i-th branch.
The growth rate of the search tree is then the root ``x > 1`` of
``sum(x ** -t_i) = 1``.
"""

from dimsolver.bench import bench, format_rows
from dimsolver.search import branching_factor

for vec in [(3, 5), (2, 7), (4, 6), (6, 6), (1, 1)]:
    print(vec, branching_factor(vec))

# Empirically the number of leaves stays far below 8 * 1.1939**n.
rows = bench("grid-like", 10, 40, seeds=2)
print(format_rows(rows[::6]))
print("all rows within bound:", all(r.ok for r in rows))

import numpy as np

ratios = np.array([r.ratio for r in rows])
print(f"leaves / bound: max {ratios.max():.2e}, median {np.median(ratios):.2e}")
