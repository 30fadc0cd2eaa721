#!/usr/bin/env python3
"""Comparing states of knowledge on three outcomes.

y sits above x when y is "x with more evidence": both rank the outcomes
the same way and every consecutive odds ratio of y is at least that of x.
"""

from entgeo import bottom, compare, joint_monotonization, leq, parse_dist, shannon, simplex_grid

# total ignorance is below everything
u = bottom(3)
x = parse_dist("1/2,1/4,1/4")
y = parse_dist("3/4,1/8,1/8")
print(f"{u} vs {x}: {compare(u, x)}")
print(f"{x} vs {y}: {compare(x, y)}  sigma={joint_monotonization(x, y)}")

# opposite rankings never compare
a, b = parse_dist("3/5,3/10,1/10"), parse_dist("1/10,3/10,3/5")
print(f"{a} vs {b}: {compare(a, b)}")

# a zero cannot be revived by more information
print(f"(1/2,1/2,0) below (1/2,1/4,1/4)? {leq(parse_dist('1/2,1/2,0'), parse_dist('1/2,1/4,1/4'))}")

# entropy drops along every strict comparison on a small grid
g = simplex_grid(3, 6)
pairs = [(p, q) for p in g for q in g if p != q and leq(p, q)]
gap = min(shannon(p) - shannon(q) for p, q in pairs)
print(f"{len(g)} grid points, {len(pairs)} strict comparisons, smallest entropy drop {gap:.4f} bits")

# the maximal states are exactly the certainties
tops = [p for p in g if not any(leq(p, q) and p != q for q in g)]
print("maximal:", ", ".join(f"({p})" for p in tops))
