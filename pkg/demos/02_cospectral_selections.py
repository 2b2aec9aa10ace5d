"""
Equal Hosoya vectors on a path
==============================

Two vertex selections on P8 whose coalescences are cospectral for every
rooted graph, checked symbolically and then on random examples.
"""

import random

from cmc.cospectral import CoalescenceSpec, exists_removal_correspondence, hosoya_vector
from cmc.coalescence import direct_coalescence_charpoly
from cmc.graph import RootedGraph, path_graph, small_connected_graphs

p8 = path_graph(8)
ones = (1, 1, 1, 1)
a = CoalescenceSpec(p8, (0, 2, 3, 6), ones)
b = CoalescenceSpec(p8, (0, 3, 5, 6), ones)

for l, (pa, pb) in enumerate(zip(hosoya_vector(a), hosoya_vector(b))):
    print(l, pa, "|", pb)

# not explained by matching vertex-deleted subgraphs
print("removal-cospectral:", exists_removal_correspondence(a, b))

rng = random.Random(0)
pool = [g for n in (2, 3, 4) for g in small_connected_graphs(n)]
for _ in range(5):
    g = rng.choice(pool)
    rg = RootedGraph(g, rng.randrange(g.n))
    pa = direct_coalescence_charpoly(p8, a.vertices, ones, rg)
    pb = direct_coalescence_charpoly(p8, b.vertices, ones, rg)
    print(g.edges(), "root", rg.root, pa == pb)
