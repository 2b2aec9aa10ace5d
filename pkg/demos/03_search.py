"""
Exhaustive search for cospectral coalescences
=============================================

Every assignment of copies to the vertices of a graph is fingerprinted at
once; collisions are checked exactly and grouped into classes.
"""

import time

from cmc.catalog import selection_tree
from cmc.charpoly import charpoly
from cmc.graph import graph6_encode, path_graph, small_connected_graphs
from cmc.search import find_matches

t = selection_tree()
print("tree", graph6_encode(t), t.edges())
for mse in range(1, 6):
    start = time.perf_counter()
    classes = find_matches([t], mse)
    print(f"mse {mse}: {len(classes)} pairs ({time.perf_counter() - start:.2f}s)")

for cls in find_matches([t], 2)[:3]:
    print(cls.signature, [m.vertices for m in cls.members])

# paths: P9 and P10 have nothing up to two copies per vertex, P11 has a few single-copy pairs
for n, mse in [(9, 2), (10, 2), (11, 1)]:
    print(f"P{n}, mse {mse}:", [m.vertices for c in find_matches([path_graph(n)], mse) for m in c.members])

# cospectral groups of seven-vertex graphs, searched with one copy per vertex
groups = {}
for g in small_connected_graphs(7):
    groups.setdefault(charpoly(g), []).append(g)
big = [grp for grp in groups.values() if len(grp) >= 3]
print(len(groups), "charpolys,", len(big), "with three or more graphs")
for grp in big:
    for cls in find_matches(grp, 1, (7, 7)):
        print(charpoly(grp[0]), "->", cls.size, "graphs share", [str(p) for p in cls.vector[:2]])
