"""State spaces from logics: labelled maximal chains modulo void statements.

Given a bounded poset A and a finite chain Γ = {⊥ < γ_1 < ... < γ_k < ⊤},
every maximal chain a_1 ⊐ ... ⊐ a_{n-1} of A with bounds stripped and
order reversed is labelled by a Γ-tuple closed upward at ⊤.  Two labelled
chains are identified when their tuples agree and the chains agree at the
interior positions and at the first ⊤.  For A = P({1..n}) the quotient is
the Bayesian order on Δ^n; for a chain it is the monotone states.

Levels of Γ are encoded as integers: 0 is ⊥, ``top`` (= k+1) is ⊤ and
1..k are the interior levels.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .coordinates import CoordSet, coordinate_on_axis, sup_coordinates
from .dist import Dist
from .errors import DimensionError, EmptyCoreWarning, IsoFailure, NotGradedError
from .order import leq
from .poset import (
    FinitePoset,
    MaxChain,
    chain_poset,
    maximal_chains,
    parse_subset,
    powerset_lattice,
    strip_and_reverse,
)

__all__ = [
    "GammaChain",
    "GammaTuple",
    "LabeledChain",
    "EquivClass",
    "ConstructedPoset",
    "cl_top_tuples",
    "indices",
    "build",
    "induced_leq",
    "xi",
    "class_state",
    "classical_grid",
    "IsoCertificate",
    "check_classical_iso",
    "alt_form",
    "from_alt_form",
    "check_monotone_states",
    "is_partial_order",
]

GammaTuple = tuple[int, ...]


@dataclass(frozen=True)
class GammaChain:
    """Bounded chain ⊥ < γ_1 < ... < γ_k < ⊤ with gauge values for the interior."""

    values: tuple[Fraction, ...] = ()

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if any(not 0 < v < 1 for v in vals):
            raise ValueError(f"interior gauge values must lie in (0,1): {vals}")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"interior gauge values must increase strictly: {vals}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def uniform(cls, k: int) -> "GammaChain":
        """k interior levels with values 1/(k+1), ..., k/(k+1)."""
        if k < 0:
            raise ValueError("number of interior levels must be >= 0")
        return cls(tuple(Fraction(i, k + 1) for i in range(1, k + 1)))

    @property
    def interior_count(self) -> int:
        return len(self.values)

    @property
    def top(self) -> int:
        return len(self.values) + 1

    @property
    def levels(self) -> range:
        return range(self.top + 1)

    def is_interior(self, level: int) -> bool:
        return 0 < level < self.top

    def value(self, level: int) -> Fraction:
        if not self.is_interior(level):
            raise ValueError(f"level {level} is a bound and carries no gauge value")
        return self.values[level - 1]

    def label(self, level: int) -> str:
        if level == 0:
            return "⊥"
        if level == self.top:
            return "⊤"
        return f"m{level}" if self.interior_count > 1 else "m"


@dataclass(frozen=True)
class LabeledChain:
    chain: MaxChain
    tuple: GammaTuple


@dataclass(frozen=True)
class EquivClass:
    """A class of labelled chains: its tuple plus the chain entries that matter.

    ``constrained`` lists (position, element) pairs, positions 1-based.
    """

    tuple: GammaTuple
    constrained: tuple[tuple[int, str], ...]

    def label(self, gamma: GammaChain) -> str:
        t = ",".join(gamma.label(v) for v in self.tuple)
        c = " ".join(f"a{i}={e}" for i, e in self.constrained)
        return f"({t})" + (f" [{c}]" if c else "")


def cl_top_tuples(gamma: GammaChain, n: int) -> list[GammaTuple]:
    """Γ-tuples of length n-1 in which ⊤ is never followed by anything else."""
    if n < 1:
        raise DimensionError(f"n >= 1 required, got {n}")
    top = gamma.top
    out = []
    for t in product(gamma.levels, repeat=n - 1):
        first_top = next((i for i, v in enumerate(t) if v == top), None)
        if first_top is None or all(v == top for v in t[first_top:]):
            out.append(t)
    return out


def indices(t: GammaTuple, gamma: GammaChain) -> tuple[frozenset[int], Optional[int]]:
    """Interior positions and the first ⊤ position (None when ⊤ is absent)."""
    interior = frozenset(i for i, v in enumerate(t, start=1) if gamma.is_interior(v))
    iota = next((i for i, v in enumerate(t, start=1) if v == gamma.top), None)
    return interior, iota


def _constrained_positions(t: GammaTuple, gamma: GammaChain) -> tuple[int, ...]:
    interior, iota = indices(t, gamma)
    return tuple(sorted(interior | ({iota} if iota is not None else set())))


def _pointwise_le(s: GammaTuple, t: GammaTuple) -> bool:
    return all(a <= b for a, b in zip(s, t))


def is_partial_order(rel: np.ndarray) -> bool:
    rel = np.asarray(rel, dtype=bool)
    if not rel.diagonal().all():
        return False
    both = rel & rel.T
    if (both & ~np.eye(len(rel), dtype=bool)).any():
        return False
    r = rel.astype(np.int64)
    return not ((r @ r > 0) & ~rel).any()


@dataclass
class ConstructedPoset:
    A: FinitePoset
    gamma: GammaChain
    core: FinitePoset
    chains: list[MaxChain]
    n: int
    classes: list[EquivClass]
    # bitmask over ``chains``: the representatives of each class
    members: list[int]
    _order: Optional[np.ndarray] = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    def index_of(self, cls: EquivClass) -> int:
        return self.classes.index(cls)

    def representatives(self, k: int) -> list[MaxChain]:
        m = self.members[k]
        return [c for i, c in enumerate(self.chains) if m >> i & 1]

    def leq_index(self, i: int, j: int) -> bool:
        return _pointwise_le(self.classes[i].tuple, self.classes[j].tuple) and bool(
            self.members[i] & self.members[j]
        )

    @property
    def order(self) -> np.ndarray:
        if self._order is None:
            k = len(self.classes)
            rel = np.zeros((k, k), dtype=bool)
            tuples = [c.tuple for c in self.classes]
            for i in range(k):
                mi, ti = self.members[i], tuples[i]
                for j in range(k):
                    rel[i, j] = bool(mi & self.members[j]) and _pointwise_le(ti, tuples[j])
            rel.setflags(write=False)
            self._order = rel
        return self._order

    def bottom_classes(self) -> list[int]:
        return [i for i in range(len(self)) if self.order[i].all()]

    def labels(self) -> list[str]:
        return [c.label(self.gamma) for c in self.classes]

    def to_poset(self) -> FinitePoset:
        return FinitePoset(self.labels(), self.order)


def build(A: FinitePoset, gamma: GammaChain) -> ConstructedPoset:
    core = strip_and_reverse(A)
    chains = maximal_chains(core)
    lengths = {len(c) for c in chains}
    if len(lengths) != 1:
        raise NotGradedError(f"maximal chains have unequal lengths {sorted(lengths)}")
    n = lengths.pop() + 1
    if n == 1:
        warnings.warn("stripped poset is empty; the construction has a single point", EmptyCoreWarning)

    classes: list[EquivClass] = []
    members: list[int] = []
    for t in cl_top_tuples(gamma, n):
        pos = _constrained_positions(t, gamma)
        groups: dict[tuple[str, ...], int] = {}
        for ci, chain in enumerate(chains):
            key = tuple(chain[i - 1] for i in pos)
            groups[key] = groups.get(key, 0) | (1 << ci)
        for key, mask in groups.items():
            classes.append(EquivClass(t, tuple(zip(pos, key))))
            members.append(mask)
    return ConstructedPoset(A, gamma, core, chains, n, classes, members)


def induced_leq(P: ConstructedPoset, c1, c2) -> bool:
    """[a.γ] ⊑ [b.φ]: γ ⊑ φ pointwise and one chain represents both classes."""
    i = c1 if isinstance(c1, int) else P.index_of(c1)
    j = c2 if isinstance(c2, int) else P.index_of(c2)
    return P.leq_index(i, j)


def xi(t: Fraction) -> Fraction:
    """Gauge from interior levels to ratios: t -> 1/(1-t), so 0 -> 1 and 1 -> inf."""
    return 1 / (1 - Fraction(t))


def class_state(
    P: ConstructedPoset,
    k: int,
    block_of: Callable[[str], Iterable[int]],
    gauge: Callable[[Fraction], Fraction] = xi,
) -> Dist:
    """Map class k to a state: each constrained position becomes a coordinate.

    The chain element at the position names the upper block of the axis via
    ``block_of``; an interior level sets the ratio through ``gauge`` and ⊤
    gives the irreducible of that axis.
    """
    cls = P.classes[k]
    coords = []
    for pos, elem in cls.constrained:
        level = cls.tuple[pos - 1]
        ratio = None if level == P.gamma.top else gauge(P.gamma.value(level))
        coords.append(coordinate_on_axis(block_of(elem), P.n, ratio))
    return sup_coordinates(CoordSet(coords, P.n))


def classical_grid(n: int, gamma: GammaChain, gauge: Callable[[Fraction], Fraction] = xi) -> list[Dist]:
    """Image of every class of build(P({1..n}), Γ) in Δ^n, in class order."""
    if n < 2:
        raise DimensionError(f"n >= 2 required, got {n}")
    P = build(powerset_lattice(n), gamma)
    return [class_state(P, k, parse_subset, gauge) for k in range(len(P))]


@dataclass(frozen=True)
class IsoCertificate:
    n: int
    gamma: GammaChain
    pairs: tuple[tuple[str, Dist], ...]
    comparisons: int

    @property
    def ok(self) -> bool:
        return True

    def __len__(self) -> int:
        return len(self.pairs)


def check_classical_iso(
    n: int,
    gamma: GammaChain,
    gauge: Callable[[Fraction], Fraction] = xi,
    A: Optional[FinitePoset] = None,
) -> IsoCertificate:
    """Verify that class -> state is injective and preserves and reflects order.

    ``A`` defaults to P({1..n}); a supplied poset must be that lattice with
    elements named like ``{1,3}``.  Raises ``IsoFailure`` with the first
    offending pair otherwise.
    """
    if n > 4 or gamma.top + 1 > 4:
        raise DimensionError("check_classical_iso is limited to n <= 4 and |Γ| <= 4")
    ref = powerset_lattice(n)
    if A is None:
        A = ref
    elif set(A.elements) != set(ref.elements) or any(
        A.leq(a, b) != ref.leq(a, b) for a in ref.elements for b in ref.elements
    ):
        raise ValueError(f"poset is not the powerset lattice P({{1..{n}}}) with subset-named elements")
    P = build(A, gamma)
    states = [class_state(P, k, parse_subset, gauge) for k in range(len(P))]
    seen: dict[Dist, int] = {}
    for k, s in enumerate(states):
        if s in seen:
            raise IsoFailure(f"classes {seen[s]} and {k} both map to {s}", (seen[s], k))
        seen[s] = k
    order = P.order
    count = 0
    for i, si in enumerate(states):
        for j, sj in enumerate(states):
            count += 1
            if bool(order[i, j]) != leq(si, sj):
                raise IsoFailure(
                    f"order mismatch: class {P.classes[i].label(gamma)} vs "
                    f"{P.classes[j].label(gamma)} ({si} vs {sj})",
                    (i, j),
                )
    labels = P.labels()
    return IsoCertificate(n, gamma, tuple(zip(labels, states)), count)


def _depths(P: ConstructedPoset) -> dict[str, int]:
    depth: dict[str, int] = {}
    for chain in P.chains:
        for i, e in enumerate(chain, start=1):
            depth.setdefault(e, i)
    return depth


def alt_form(A: FinitePoset, gamma: GammaChain) -> list[tuple[tuple[str, ...], GammaTuple]]:
    """Variable-length form of each class: void (⊥) entries dropped.

    A class maps to the chain of its constrained elements and the levels at
    those positions; only the last level may be ⊤.
    """
    P = build(A, gamma)
    return [
        (tuple(e for _, e in c.constrained), tuple(c.tuple[i - 1] for i, _ in c.constrained))
        for c in P.classes
    ]


def from_alt_form(P: ConstructedPoset, pair: tuple[Sequence[str], GammaTuple]) -> EquivClass:
    """Inverse of ``alt_form``: positions are recovered from element depths."""
    chain, levels = pair
    depth = _depths(P)
    positions = [depth[e] for e in chain]
    t = [0] * (P.n - 1)
    for p, lv in zip(positions, levels):
        t[p - 1] = lv
    if levels and levels[-1] == P.gamma.top:
        for p in range(positions[-1], P.n):
            t[p - 1] = P.gamma.top
    return EquivClass(tuple(t), tuple(zip(positions, chain)))


def check_monotone_states(m: int, gamma: GammaChain, gauge: Callable[[Fraction], Fraction] = xi) -> bool:
    """build(chain of m elements, Γ) against the pointwise order on Cl_⊤ tuples.

    Also checks that every class lands on a monotone state of Δ^{m-1} and
    that the state map preserves and reflects order.
    """
    if m < 3:
        raise DimensionError(f"m >= 3 required, got {m}")
    P = build(chain_poset(m), gamma)
    tuples = cl_top_tuples(gamma, m - 1)
    if sorted(c.tuple for c in P.classes) != sorted(tuples):
        return False
    for i in range(len(P)):
        for j in range(len(P)):
            if bool(P.order[i, j]) != _pointwise_le(P.classes[i].tuple, P.classes[j].tuple):
                return False
    depth = _depths(P)
    states = [class_state(P, k, lambda e: range(1, depth[e] + 1), gauge) for k in range(len(P))]
    if len(set(states)) != len(states) or not all(s.is_monotone() for s in states):
        return False
    return all(
        bool(P.order[i, j]) == leq(states[i], states[j])
        for i in range(len(P))
        for j in range(len(P))
    )
