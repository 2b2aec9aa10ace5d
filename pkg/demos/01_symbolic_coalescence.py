"""
Characteristic polynomials of multiple coalescences
===================================================

Attach copies of a rooted graph to several vertices of a tree and read the
result as a polynomial in x, Q and R.
"""

from cmc.catalog import deleted_tree, letters
from cmc.charpoly import charpoly, vertex_deleted_charpolys
from cmc.coalescence import concrete_coalescence_charpoly, direct_coalescence_charpoly, hosoya_charpoly
from cmc.graph import RootedGraph, cycle_graph

# a six-vertex tree, vertices named a..f
t = deleted_tree()
print("edges:", t.edges())
print("P(T) =", charpoly(t))
for name, p in zip("abcdef", vertex_deleted_charpolys(t)):
    print(f"P(T - {name}) = {p}")

# two copies at a, b, c, e and one at d
sig = (2, 2, 2, 2, 1)
first = hosoya_charpoly(t, letters("abced"), sig)
second = hosoya_charpoly(t, letters("abdfe"), sig)
print(first)
print("same expansion:", first == second)

# substituting a concrete rooted graph gives the ordinary polynomial
g = RootedGraph(cycle_graph(4), 0)
via_formula = concrete_coalescence_charpoly(t, letters("abced"), sig, g)
built = direct_coalescence_charpoly(t, letters("abced"), sig, g)
print(via_formula == built, via_formula.degree)
