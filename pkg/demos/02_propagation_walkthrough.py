"""
Forced colors and the undo trail
================================

A DIM is the same thing as a black/white coloring in which white vertices are
independent and every black vertex has exactly one black neighbour. This
script drives the coloring engine by hand.
"""

from dimsolver.coloring import BLACK, Coloring, propagate
from dimsolver.graph import Graph

# Path a-b-c with weights ab=1, bc=2. Coloring b black leaves a choice of
# partner; both a and c only see b, so the cheaper edge is taken and the
# other choice is remembered as a factor of 2 in the count.
p3 = Graph(3, [(0, 1, 1.0), (1, 2, 2.0)])
c = Coloring(p3)
c.assign_color(1, BLACK)
out = propagate(c)
print(out.status, c, "DIM:", out.dim())
print("rules fired:", dict(c.firings))

# In a diamond the two degree-3 vertices are forced black straight away.
diamond = Graph(4, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (1, 3, 1)])
c = Coloring(diamond)
print(propagate(c).status, c)

# Every assignment goes on the trail, so rolling back is exact.
star = Graph(4, [(0, 1, 3.0), (0, 2, 1.0), (0, 3, 2.0)])
c = Coloring(star)
before = c.snapshot()
c.assign_color(0, BLACK)
propagate(c)
print("after propagation:", c)
c.restore_to_mark(0)
print("rolled back cleanly:", c.snapshot() == before)
