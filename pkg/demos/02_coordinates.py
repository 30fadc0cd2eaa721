#!/usr/bin/env python3
"""Every state is the supremum of its coordinates.

A coordinate has at most two distinct values.  Its axis is the set of
indices carrying the larger value, and the ratio larger/smaller says how
far up the axis it sits.
"""

from fractions import Fraction

from entgeo import Perm, build_automorphism, coordinates_of, leq, parse_dist, simplex_grid, sup_coordinates

x = parse_dist("1/2,1/3,1/6")
cs = coordinates_of(x)
for j, c in enumerate(cs, start=1):
    print(f"c({j}) = ({c.dist})  axis {sorted(c.axis)}  ratio {c.ratio}  below x: {leq(c.dist, x)}")
print("sup of coordinates:", sup_coordinates(cs))

# round trip over a whole grid
g = simplex_grid(4, 4)
print(f"round trip exact on all {len(g)} points of the 4-outcome grid:",
      all(sup_coordinates(coordinates_of(p)) == p for p in g))

# automorphisms: relabel outcomes, and squash or stretch individual axes
h = build_automorphism(Perm([2, 1, 3]), {(1,): lambda r: r * r})
for p in ("1/2,1/3,1/6", "3/5,1/5,1/5", "1/2,1/2,0"):
    q = parse_dist(p)
    print(f"h({q}) = {h(q)}")

# the image of the ratio-2 coordinate on axis {1} has ratio 4 after relabelling
print(coordinates_of(h(parse_dist("1/2,1/4,1/4")))[0].ratio == Fraction(4))
