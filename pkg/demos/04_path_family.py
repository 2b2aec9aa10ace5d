"""
An infinite family on paths
===========================

Parameters k, m, d and offsets a give two single-copy selections on the path
with kd - 1 vertices that differ in one vertex only.
"""

from collections import Counter

from cmc.families import PathFamilyParams, admissible_params, generate_pair, theta, verify_pair

p = PathFamilyParams(k=4, m=1, d=3, a=(0,))
first, second = generate_pair(p)
print(f"P_{p.n}: {first.vertices} | {second.vertices}", verify_pair(first, second))

# the vertex map that matches the two deletions
print({x: theta(p, x) for x in range(p.n) if x not in (p.v, p.w)})

sizes = Counter()
for q in admissible_params(20, 2):
    assert verify_pair(*generate_pair(q))
    sizes[q.n] += 1
print(sorted(sizes.items()))
