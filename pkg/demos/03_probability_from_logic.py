#!/usr/bin/env python3
"""Rebuilding a grid of probability states from the logic of subsets.

Take the Boolean lattice of subsets of {1,2,3}, drop its bounds and
reverse it.  Its maximal chains are the orderings of the three outcomes.
Label each chain with a "how sure" level per step, identify labellings
that say the same thing, and order what is left.
"""

from entgeo import (
    GammaChain,
    build,
    chain_poset,
    check_classical_iso,
    classical_grid,
    maximal_chains,
    powerset_lattice,
    strip_and_reverse,
    to_dot,
)

A = powerset_lattice(3)
chains = maximal_chains(strip_and_reverse(A))
print(f"{len(chains)} maximal chains, e.g. {chains[0]}")

gamma = GammaChain.uniform(1)  # ⊥ < m < ⊤ with m worth 1/2
P = build(A, gamma)
print(f"{len(P)} classes")
for label, state in zip(P.labels()[:8], classical_grid(3, gamma)[:8]):
    print(f"  {label:28s} -> ({state})")

cert = check_classical_iso(3, gamma)
print(f"order matches the Bayesian order on all {cert.comparisons} pairs")

# the same recipe on a chain gives monotone states
M = build(chain_poset(4), gamma)
print(f"4-element chain: {len(M)} classes")

# Hasse diagram for graphviz
dot = to_dot(build(powerset_lattice(2), gamma).to_poset(), name="two_outcomes")
print(dot)
