"""
Counting DIMs and checking against brute force
==============================================

The brute-force solver tries all 2^n black sets. It is slow but obviously
right, so it is the reference the branch-and-reduce search is checked against.
"""

import time

from dimsolver import brute_force_solve, solve
from dimsolver.generate import generate_random_graph, planted_dim_graph

agree = 0
for seed in range(200):
    g = planted_dim_graph(14, 0.3, seed)
    ref, sol = brute_force_solve(g), solve(g)
    agree += (ref.weight, ref.count) == (sol.weight, sol.count)
print(f"{agree}/200 planted instances agree with brute force")

# Counts are Python integers, so they never overflow.
g, _ = generate_random_graph(12, 0.3, seed=5, wmin=-5, wmax=20, integer=True)
print(solve(g).status, brute_force_solve(g).status)

from dimsolver.graph import Graph

stars = []
for k in range(50):
    c = 4 * k
    stars += [(c, c + 1, 1.0), (c, c + 2, 2.0), (c, c + 3, 3.0)]
t0 = time.perf_counter()
sol = solve(Graph(200, stars))
print(f"50 disjoint stars: {sol.count} DIMs (= 3**50: {sol.count == 3**50}),"
      f" weight {sol.weight}, {1e3 * (time.perf_counter() - t0):.1f} ms")
