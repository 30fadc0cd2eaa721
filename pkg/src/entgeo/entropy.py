"""Shannon entropy and its compatibility with the Bayesian order.

Entropy is the only floating-point quantity in the package.  Comparisons
against it use a relative tolerance of ``TOL``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

from .dist import Dist, _same_dim
from .errors import NotAChainError, PreconditionError
from .order import leq

__all__ = [
    "EntropyValue",
    "shannon",
    "check_antitone",
    "mixing_law_check",
    "strictly_increasing_on_axis",
    "parse_log_base",
    "TOL",
]

TOL = 1e-12

Base = Union[float, int, Fraction, str]


class EntropyValue(float):
    """A float that remembers the logarithm base it was computed in."""

    base: float

    def __new__(cls, value: float, base: float):
        obj = super().__new__(cls, value)
        obj.base = base
        return obj

    def __repr__(self) -> str:
        return f"EntropyValue({float(self)!r}, base={self.base!r})"


def parse_log_base(base: Base) -> float:
    if isinstance(base, str):
        if base.strip().lower() == "e":
            return math.e
        base = Fraction(base.strip())
    b = float(base)
    if not b > 1:
        raise ValueError(f"logarithm base must exceed 1, got {base!r}")
    return b


def shannon(x: Dist, base: Base = 2, normalized: bool = False) -> EntropyValue:
    """-sum x_i log x_i with 0 log 0 = 0.

    With ``normalized=True`` the value is divided by log(n), landing in
    [0, 1] whatever the base.
    """
    b = parse_log_base(base)
    h = 0.0
    for v in x.entries:
        if v:
            h -= float(v) * math.log(v.numerator / v.denominator)
    if normalized:
        h /= math.log(x.n)
    else:
        h /= math.log(b)
    # -0.0 from a point mass
    return EntropyValue(h + 0.0 if h else 0.0, b)


def _gap(hx: float, hy: float) -> float:
    return TOL * max(1.0, abs(hx), abs(hy))


def check_antitone(x: Dist, y: Dist, base: Base = 2) -> bool:
    """True unless x ⊑ y while entropy goes up from x to y."""
    _same_dim(x, y)
    if not leq(x, y):
        return True
    hx, hy = shannon(x, base), shannon(y, base)
    return hx >= hy - _gap(hx, hy)


def mixing_law_check(x: Dist, y: Dist, p) -> bool:
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise PreconditionError(f"mixing weight {p} outside [0,1]")
    if not leq(x, y):
        raise PreconditionError("mixing law requires x ⊑ y")
    z = x.mix(y, p)
    return leq(x, z) and leq(z, y)


def strictly_increasing_on_axis(axis: Sequence[Dist], base: Base = 2) -> bool:
    """Information strictly increases along an increasing chain of one axis.

    ``axis`` must be listed bottom-up; each consecutive pair has to be
    ⊑-comparable in that direction.  Returns whether entropy strictly drops
    at every step.
    """
    for a, b in zip(axis, axis[1:]):
        if not leq(a, b):
            raise NotAChainError(f"{a} ⋢ {b}")
    hs = [shannon(a, base) for a in axis]
    return all(h0 - h1 > _gap(h0, h1) for h0, h1 in zip(hs, hs[1:]))
