#!/usr/bin/env python3
"""Symmetries of the order and what entropy pins down.

Relabelling outcomes and regauging axes give order automorphisms.  Once
the certainties are fixed and entropy must be preserved, nothing but the
identity survives on a finite grid.
"""

from entgeo import (
    GammaChain,
    automorphisms,
    build,
    entropy_rigidity_check,
    powerset_lattice,
    simplex_grid,
)
from entgeo.coordinates import grid_poset

for n, d in ((2, 6), (3, 3)):
    P = grid_poset(simplex_grid(n, d))
    print(f"grid n={n} d={d}: {len(P)} points, {len(automorphisms(P))} order automorphisms")

print("rigid under entropy, n=3 d=6:", entropy_rigidity_check(3, simplex_grid(3, 6)))

for n in (2, 3):
    Q = build(powerset_lattice(n), GammaChain.uniform(1)).to_poset()
    print(f"constructed space for n={n}: {len(Q)} classes, {len(automorphisms(Q))} automorphisms")
