"""Exact-rational distributions on {1,...,n}.

Indices exposed by the operations here (permutation images, block
members, projection index) are 1-based, matching the usual notation
x = (x_1, ..., x_n).  Python item access ``x[k]`` stays 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator

from .errors import (
    DimensionError,
    NormalizationError,
    ParseError,
    PartitionError,
    ProjectionUndefined,
    SpectrumError,
)

__all__ = [
    "Dist",
    "Perm",
    "SpectralRep",
    "MonoDist",
    "parse_dist",
    "monotonize",
    "spectral_rep",
    "from_spectral_rep",
    "bayesian_projection",
    "monotonizes",
    "simplex_grid",
    "all_perms",
]


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        # floats are accepted only when they are exactly representable decimals
        return Fraction(repr(v))
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not an exact rational: {v!r}") from exc
    return Fraction(v)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Dist:
    """A point of the simplex: n >= 2 exact rationals in [0, 1] summing to 1."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        vals = tuple(_as_fraction(v) for v in entries)
        if len(vals) < 2:
            raise DimensionError(f"a distribution needs n >= 2 entries, got {len(vals)}")
        if any(v < 0 or v > 1 for v in vals):
            raise NormalizationError(f"entries must lie in [0,1]: {vals}")
        if sum(vals) != 1:
            raise NormalizationError(f"entries sum to {sum(vals)}, not 1")
        object.__setattr__(self, "entries", vals)

    @classmethod
    def of(cls, *values) -> "Dist":
        return cls(values)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __str__(self) -> str:
        return ",".join(_fmt(v) for v in self.entries)

    def __repr__(self) -> str:
        return f"Dist({self})"

    def permuted(self, sigma: "Perm") -> "Dist":
        """Return x.sigma, i.e. the list (x_{sigma(1)}, ..., x_{sigma(n)})."""
        if len(sigma) != self.n:
            raise DimensionError(f"permutation of size {len(sigma)} on Δ^{self.n}")
        return Dist(self.entries[s - 1] for s in sigma.images)

    def spectrum(self) -> tuple[Fraction, ...]:
        """Distinct values, decreasing."""
        return tuple(sorted(set(self.entries), reverse=True))

    def is_monotone(self) -> bool:
        e = self.entries
        return all(e[i] >= e[i + 1] for i in range(len(e) - 1))

    def mix(self, other: "Dist", p) -> "Dist":
        """(1-p) self + p other."""
        p = _as_fraction(p)
        _same_dim(self, other)
        return Dist((1 - p) * a + p * b for a, b in zip(self.entries, other.entries))


def _same_dim(x: Dist, y: Dist) -> None:
    if x.n != y.n:
        raise DimensionError(f"dimension mismatch: {x.n} vs {y.n}")


def parse_dist(text: str) -> Dist:
    """Parse ``"1/2,1/3,1/6"``; integers and finite decimals are converted exactly."""
    parts = [p for p in text.replace(" ", "").split(",")]
    if not parts or any(p == "" for p in parts):
        raise ParseError(f"malformed distribution: {text!r}")
    return Dist(_as_fraction(p) for p in parts)


@dataclass(frozen=True)
class Perm:
    """A bijection of {1,...,n}, stored as its image list."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise DimensionError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __iter__(self):
        return iter(self.images)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, s in enumerate(self.images, start=1):
            inv[s - 1] = i
        return Perm(inv)

    def image(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self(i) for i in subset)

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"


def all_perms(n: int) -> list[Perm]:
    return [Perm(p) for p in permutations(range(1, n + 1))]


@dataclass(frozen=True)
class MonoDist:
    entries: tuple[Fraction, ...]
    witness: Perm


@dataclass(frozen=True)
class SpectralRep:
    """Ordered partition I_1 > ... > I_k together with the decreasing spectrum.

    ``blocks[j]`` holds the (1-based) indices carrying ``spectrum[j]``.
    """

    blocks: tuple[frozenset[int], ...]
    spectrum: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        object.__setattr__(self, "spectrum", tuple(_as_fraction(v) for v in self.spectrum))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def cumulative(self) -> tuple[int, ...]:
        out, acc = [], 0
        for m in self.multiplicities:
            acc += m
            out.append(acc)
        return tuple(out)

    @property
    def zero_block_present(self) -> bool:
        return bool(self.spectrum) and self.spectrum[-1] == 0

    @property
    def n0(self) -> int:
        """Number of non-zero blocks."""
        return len(self.blocks) - 1 if self.zero_block_present else len(self.blocks)

    @property
    def nbar0(self) -> int:
        """Number of indices carrying a non-zero value."""
        return sum(self.multiplicities[: self.n0])

    @property
    def I0(self) -> frozenset[int]:
        """The zero block (empty when 0 is not in the spectrum)."""
        return self.blocks[-1] if self.zero_block_present else frozenset()

    @property
    def K0(self) -> frozenset[int]:
        return self.K[-1] if self.zero_block_present else frozenset()

    @property
    def K(self) -> tuple[frozenset[int], ...]:
        """Position blocks K_j of the monotonized list: K_j = {nbar_{j-1}+1, ..., nbar_j}."""
        out, lo = [], 0
        for hi in self.cumulative:
            out.append(frozenset(range(lo + 1, hi + 1)))
            lo = hi
        return tuple(out)


def monotonize(x: Dist) -> MonoDist:
    """Non-increasing rearrangement with the stable witness permutation."""
    order = sorted(range(1, x.n + 1), key=lambda i: -x.entries[i - 1])
    sigma = Perm(order)
    return MonoDist(tuple(x.entries[i - 1] for i in order), sigma)


def spectral_rep(x: Dist) -> SpectralRep:
    spec = x.spectrum()
    blocks = tuple(
        frozenset(i for i in range(1, x.n + 1) if x.entries[i - 1] == v) for v in spec
    )
    return SpectralRep(blocks, spec)


def from_spectral_rep(rep: SpectralRep) -> Dist:
    blocks, spec = rep.blocks, rep.spectrum
    if len(blocks) != len(spec) or not blocks:
        raise PartitionError("blocks and spectrum must be non-empty and of equal length")
    if any(not b for b in blocks):
        raise PartitionError("empty block")
    n = rep.n
    union = frozenset().union(*blocks)
    if len(union) != n or union != frozenset(range(1, n + 1)):
        raise PartitionError(f"blocks do not partition 1..{n}: {[sorted(b) for b in blocks]}")
    if any(v < 0 or v > 1 for v in spec):
        raise SpectrumError(f"spectrum outside [0,1]: {spec}")
    if any(spec[j] <= spec[j + 1] for j in range(len(spec) - 1)):
        raise SpectrumError(f"spectrum not strictly decreasing: {spec}")
    total = sum(len(b) * v for b, v in zip(blocks, spec))
    if total != 1:
        raise NormalizationError(f"sum of multiplicity * value is {total}, not 1")
    vals = [Fraction(0)] * n
    for b, v in zip(blocks, spec):
        for i in b:
            vals[i - 1] = v
    return Dist(vals)


def bayesian_projection(x: Dist, i: int) -> Dist:
    """Condition on "the state is not e_i": drop entry i and renormalize."""
    if x.n < 3:
        raise DimensionError("projection of a Δ^2 point would leave a single entry")
    if not 1 <= i <= x.n:
        raise DimensionError(f"index {i} out of range 1..{x.n}")
    xi = x.entries[i - 1]
    if xi == 1:
        raise ProjectionUndefined(f"x_{i} = 1")
    scale = 1 / (1 - xi)
    return Dist(v * scale for k, v in enumerate(x.entries, start=1) if k != i)


def monotonizes(x: Dist, sigma: Perm) -> bool:
    if len(sigma) != x.n:
        raise DimensionError(f"permutation of size {len(sigma)} on Δ^{x.n}")
    e = x.entries
    return all(e[sigma.images[k] - 1] >= e[sigma.images[k + 1] - 1] for k in range(x.n - 1))


def simplex_grid(n: int, d: int) -> list[Dist]:
    """All points of Δ^n whose entries are multiples of 1/d, in lexicographic order."""
    if n < 2:
        raise DimensionError("n >= 2 required")
    if d < 1:
        raise DimensionError("grid denominator must be positive")
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(Dist(Fraction(k, d) for k in prefix + [remaining]))
            return
        for k in range(remaining, -1, -1):
            rec(prefix + [k], remaining - k, slots - 1)

    rec([], d, n)
    return out
