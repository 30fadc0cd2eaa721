"""Coordinates: states with an at most binary spectrum.

Every state x is the supremum of its coordinate set C^x, one coordinate
per boundary between consecutive spectral blocks.  A coordinate on the
axis labelled by the index set I is determined by the ratio
upper/lower of its two values, running from 1 (the bottom) to infinity
(the irreducible, uniform on I).  Gauges act on that ratio.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .dist import Dist, Perm, SpectralRep, from_spectral_rep, spectral_rep
from .errors import DimensionError, GaugeDomainError, InvalidCoordSet
from .order import bottom, is_maximal, leq

__all__ = [
    "Coordinate",
    "Irreducible",
    "CoordSet",
    "coordinate_on_axis",
    "coordinates_of",
    "sup_coordinates",
    "is_valid_coord_set",
    "irreducibles",
    "downset_is_chain",
    "grid_coordinates",
    "build_automorphism",
    "entropy_rigidity_check",
    "grid_poset",
]


@dataclass(frozen=True)
class Coordinate:
    dist: Dist
    axis: frozenset[int]

    @classmethod
    def from_dist(cls, x: Dist) -> "Coordinate":
        rep = spectral_rep(x)
        if len(rep.blocks) > 2:
            raise InvalidCoordSet(f"{x} has {len(rep.blocks)} spectral values")
        if len(rep.blocks) == 2 and rep.zero_block_present:
            return Irreducible(x, rep.blocks[0])
        return cls(x, rep.blocks[0])

    @property
    def n(self) -> int:
        return self.dist.n

    @property
    def is_bottom(self) -> bool:
        return len(self.axis) == self.n

    @property
    def is_irreducible(self) -> bool:
        return not self.is_bottom and min(self.dist.entries) == 0

    @property
    def upper(self) -> Fraction:
        return max(self.dist.entries)

    @property
    def lower(self) -> Fraction:
        return min(self.dist.entries)

    @property
    def ratio(self) -> Optional[Fraction]:
        """upper/lower; None stands for the infinite ratio of an irreducible."""
        if self.lower == 0:
            return None
        return self.upper / self.lower

    def relabeled(self, sigma: Perm) -> "Coordinate":
        return Coordinate.from_dist(self.dist.permuted(sigma))

    def __str__(self) -> str:
        return str(self.dist)


class Irreducible(Coordinate):
    """A coordinate with 0 in its spectrum: uniform on a proper subset."""


def coordinate_on_axis(axis: Iterable[int], n: int, ratio: Optional[Fraction]) -> Coordinate:
    """The coordinate on ``axis`` with upper/lower = ``ratio`` (None: irreducible)."""
    axis = frozenset(axis)
    if not axis or len(axis) >= n or not axis <= frozenset(range(1, n + 1)):
        raise InvalidCoordSet(f"axis {sorted(axis)} is not a proper non-empty subset of 1..{n}")
    k = len(axis)
    if ratio is None:
        a, b = Fraction(1, k), Fraction(0)
    else:
        ratio = Fraction(ratio)
        if ratio <= 1:
            raise InvalidCoordSet(f"ratio {ratio} must exceed 1")
        b = 1 / (k * ratio + (n - k))
        a = ratio * b
    return Coordinate.from_dist(Dist(a if i in axis else b for i in range(1, n + 1)))


@dataclass(frozen=True)
class CoordSet:
    """Coordinates c(1), ..., c(m) of a state in Δ^n, ordered by growing axis."""

    coords: tuple[Coordinate, ...]
    n: int

    def __init__(self, coords: Iterable[Coordinate], n: Optional[int] = None):
        coords = tuple(c if isinstance(c, Coordinate) else Coordinate.from_dist(c) for c in coords)
        if n is None:
            if not coords:
                raise DimensionError("an empty coordinate set needs an explicit n")
            n = coords[0].n
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "n", n)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    @property
    def axes(self) -> tuple[frozenset[int], ...]:
        return tuple(c.axis for c in self.coords)

    def axis_irreducibles(self) -> tuple[Dist, ...]:
        return tuple(coordinate_on_axis(a, self.n, None).dist for a in self.axes)


def coordinates_of(x: Dist) -> CoordSet:
    rep = spectral_rep(x)
    n = x.n
    spec = rep.spectrum
    coords = []
    upper: frozenset[int] = frozenset()
    for j in range(len(spec) - 1):
        upper = upper | rep.blocks[j]
        ratio = None if spec[j + 1] == 0 else spec[j] / spec[j + 1]
        coords.append(coordinate_on_axis(upper, n, ratio))
    return CoordSet(coords, n)


def is_valid_coord_set(coords: Union[CoordSet, Sequence[Coordinate]], n: Optional[int] = None) -> bool:
    """Whether the list is the coordinate set of some state.

    Requires at most n-1 coordinates, strictly growing axes (equivalently
    strictly ⊐-decreasing axis irreducibles), no bottom, and an irreducible
    only in last position.
    """
    try:
        cs = coords if isinstance(coords, CoordSet) else CoordSet(coords, n)
    except (InvalidCoordSet, DimensionError):
        return False
    if n is not None and cs.n != n:
        return False
    if any(c.n != cs.n for c in cs):
        return False
    if len(cs) > cs.n - 1:
        return False
    if any(c.is_bottom for c in cs):
        return False
    irr = cs.axis_irreducibles()
    for a, b in zip(irr, irr[1:]):
        if a == b or not leq(b, a):
            return False
    for j, c in enumerate(cs.coords):
        if c.is_irreducible and j != len(cs) - 1:
            return False
    return True


def sup_coordinates(coords: Union[CoordSet, Sequence[Coordinate]], n: Optional[int] = None) -> Dist:
    """Rebuild the unique state whose coordinate set is ``coords``."""
    cs = coords if isinstance(coords, CoordSet) else CoordSet(coords, n)
    if not is_valid_coord_set(cs):
        raise InvalidCoordSet(f"not a coordinate set: {[str(c) for c in cs]}")
    if not cs.coords:
        return bottom(cs.n)
    full = frozenset(range(1, cs.n + 1))
    blocks, prev = [], frozenset()
    for a in cs.axes:
        blocks.append(a - prev)
        prev = a
    blocks.append(full - prev)
    # unnormalized values: v_1 = 1, v_{j+1} = v_j / ratio_j
    vals = [Fraction(1)]
    for c in cs.coords:
        r = c.ratio
        vals.append(Fraction(0) if r is None else vals[-1] / r)
    total = sum(len(b) * v for b, v in zip(blocks, vals))
    return from_spectral_rep(SpectralRep(tuple(blocks), tuple(v / total for v in vals)))


def irreducibles(n: int) -> list[Irreducible]:
    """The 2^n - 2 irreducibles, by subset size then lexicographically."""
    if n < 2:
        raise DimensionError(f"n >= 2 required, got {n}")
    return [
        coordinate_on_axis(s, n, None)
        for k in range(1, n)
        for s in combinations(range(1, n + 1), k)
    ]


def downset_is_chain(x: Dist, grid: Sequence[Dist]) -> bool:
    below = [y for y in grid if leq(y, x)]
    return all(leq(a, b) or leq(b, a) for a, b in combinations(below, 2))


def grid_coordinates(grid: Sequence[Dist], axis: Optional[Iterable[int]] = None) -> list[Coordinate]:
    """Grid points that are (non-bottom) coordinates, optionally on one axis."""
    want = None if axis is None else frozenset(axis)
    out = []
    for x in grid:
        if len(x.spectrum()) != 2:
            continue
        c = Coordinate.from_dist(x)
        if want is None or c.axis == want:
            out.append(c)
    return out


Gauge = Union[Callable[[Fraction], Fraction], Mapping[Fraction, Fraction]]


def _apply_gauge(gauge: Gauge, ratio: Fraction) -> Fraction:
    if isinstance(gauge, Mapping):
        if ratio not in gauge:
            raise GaugeDomainError(f"gauge undefined at ratio {ratio}")
        out = gauge[ratio]
    else:
        out = gauge(ratio)
    out = Fraction(out)
    if out <= 1:
        raise GaugeDomainError(f"gauge sends ratio {ratio} to {out} <= 1")
    return out


def build_automorphism(
    sigma: Perm,
    gauges: Optional[Mapping[Iterable[int], Gauge]] = None,
    domain: Optional[Sequence[Dist]] = None,
) -> Callable[[Dist], Dist]:
    """Order-automorphism from a relabelling and per-axis gauges.

    A gauge acts on the ratio parameter of its axis and must be strictly
    increasing from (1, inf) to (1, inf); irreducibles (infinite ratio) stay
    put.  Axes without a gauge are left alone.  When ``domain`` is given,
    every gauge is checked on all ratios occurring there and a
    ``GaugeDomainError`` raised on failure.  The returned map decomposes its
    argument, gauges each coordinate, takes the supremum and relabels by
    sigma.
    """
    gauges = {frozenset(k): g for k, g in (gauges or {}).items()}
    n = len(sigma)
    for axis in gauges:
        if not axis or len(axis) >= n or not axis <= frozenset(range(1, n + 1)):
            raise GaugeDomainError(f"{sorted(axis)} does not label an axis of Δ^{n}")

    if domain is not None:
        seen: dict[frozenset[int], set[Fraction]] = {a: set() for a in gauges}
        for x in domain:
            for c in coordinates_of(x):
                if c.axis in seen and c.ratio is not None:
                    seen[c.axis].add(c.ratio)
        for axis, ratios in seen.items():
            rs = sorted(ratios)
            imgs = [_apply_gauge(gauges[axis], r) for r in rs]
            if any(a >= b for a, b in zip(imgs, imgs[1:])):
                raise GaugeDomainError(f"gauge on axis {sorted(axis)} is not strictly increasing")

    def h(y: Dist) -> Dist:
        if y.n != n:
            raise DimensionError(f"automorphism of Δ^{n} applied to Δ^{y.n}")
        out = []
        for c in coordinates_of(y):
            g = gauges.get(c.axis)
            if g is None or c.ratio is None:
                out.append(c)
            else:
                out.append(coordinate_on_axis(c.axis, n, _apply_gauge(g, c.ratio)))
        return sup_coordinates(CoordSet(out, n)).permuted(sigma)

    return h


def grid_poset(grid: Sequence[Dist]):
    """The grid as a FinitePoset named by the text form of each point."""
    from .poset import FinitePoset

    names = [str(x) for x in grid]
    rel = [[leq(a, b) for b in grid] for a in grid]
    return FinitePoset.from_relation(names, rel)


def entropy_rigidity_check(n: int, grid: Sequence[Dist]) -> bool:
    """True iff the identity is the only grid automorphism fixing each pure
    state and preserving Shannon entropy."""
    from .entropy import shannon
    from .poset import automorphisms

    grid = list(grid)
    if any(x.n != n for x in grid):
        raise DimensionError("grid dimension does not match n")
    P = grid_poset(grid)
    colors = {}
    for x in grid:
        key = ("pure", str(x)) if is_maximal(x) else ("h", round(float(shannon(x)), 10))
        colors[str(x)] = key
    auts = automorphisms(P, colors=colors)
    return len(auts) == 1
