"""
Solving a small instance
========================

Read a graph in the ``p dim`` text format, find its cheapest dominating
induced matching, and count how many there are.
"""

from dimsolver import is_dim, parse_graph, solve

# A 6-cycle with a pendant vertex. Weights may be negative; the solver
# shifts them internally and reports the answer on the original scale.
text = """\
c hexagon with a pendant on vertex 1
p dim 7 7
e 1 2 3
e 2 3 -1
e 3 4 4
e 4 5 2
e 5 6 1
e 6 1 5
e 1 7 2
"""
g = parse_graph(text)
sol = solve(g)
print("status:", sol.status)
print("minimum weight:", sol.weight)
print("witness (1-based):", [(u + 1, v + 1) for u, v in sol.edges])
print("number of DIMs:", sol.count)
assert is_dim(g, sol.edges)

# The search statistics show which rules did the work.
print("nodes", sol.stats.nodes, "leaves", sol.stats.leaves, "max stack", sol.stats.max_stack)
print(dict(sol.stats.rule_firings))

# Any K4 rules out a DIM before the search starts.
k4 = parse_graph("p dim 4 6\ne 1 2 1\ne 1 3 1\ne 1 4 1\ne 2 3 1\ne 2 4 1\ne 3 4 1\n")
print(solve(k4).status, "K4 at", solve(k4).k4)
