"""The Bayesian order on Δ^n.

``leq`` is the production path: one joint monotonization followed by
n-1 cross-multiplied inequalities.  ``leq_inductive`` recurses through
Bayesian projections down to the two-state rule and is kept as an
independent oracle (factorial cost, capped at n <= 6).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .dist import Dist, Perm, _same_dim, bayesian_projection, spectral_rep
from .errors import DimensionError

__all__ = [
    "joint_monotonization",
    "leq",
    "leq_inductive",
    "is_maximal",
    "bottom",
    "degeneration_necessary",
    "compare",
]

HALF = Fraction(1, 2)
INDUCTIVE_MAX_N = 6


def joint_monotonization(x: Dist, y: Dist) -> Optional[Perm]:
    """A permutation monotonizing both x and y, or None.

    Sorting by (-x_i, -y_i) refines the blocks of x by the values of y;
    the result monotonizes y as well exactly when no pair i, j has
    x_i > x_j together with y_i < y_j.
    """
    _same_dim(x, y)
    xs, ys = x.entries, y.entries
    order = sorted(range(x.n), key=lambda i: (-xs[i], -ys[i]))
    for a, b in zip(order, order[1:]):
        if ys[a] < ys[b]:
            return None
    return Perm(i + 1 for i in order)


def leq(x: Dist, y: Dist) -> bool:
    """x ⊑ y: y is at least as informative as x."""
    sigma = joint_monotonization(x, y)
    if sigma is None:
        return False
    xm = [x.entries[s - 1] for s in sigma.images]
    ym = [y.entries[s - 1] for s in sigma.images]
    return all(xm[i] * ym[i + 1] <= xm[i + 1] * ym[i] for i in range(x.n - 1))


def compare(x: Dist, y: Dist) -> str:
    """One of ``"eq"``, ``"lt"`` (x ⊏ y), ``"gt"`` or ``"incomparable"``."""
    if x == y:
        return "eq"
    if leq(x, y):
        return "lt"
    if leq(y, x):
        return "gt"
    return "incomparable"


def _leq_two(x: Dist, y: Dist) -> bool:
    x1, y1 = x.entries[0], y.entries[0]
    return (y1 <= x1 <= HALF) or (HALF <= x1 <= y1)


def leq_inductive(x: Dist, y: Dist) -> bool:
    """x ⊑ y via the projection rule, bottoming out at the two-state order."""
    _same_dim(x, y)
    if x.n > INDUCTIVE_MAX_N:
        raise DimensionError(f"leq_inductive is an oracle capped at n <= {INDUCTIVE_MAX_N}")
    if x.n == 2:
        return _leq_two(x, y)
    for i in range(1, x.n + 1):
        if x.entries[i - 1] < 1 and y.entries[i - 1] < 1:
            if not leq_inductive(bayesian_projection(x, i), bayesian_projection(y, i)):
                return False
    return True


def is_maximal(x: Dist) -> bool:
    return set(x.entries) <= {0, 1}


def bottom(n: int) -> Dist:
    if n < 2:
        raise DimensionError(f"n >= 2 required, got {n}")
    return Dist([Fraction(1, n)] * n)


def degeneration_necessary(x: Dist, y: Dist) -> bool:
    """Necessary conditions for x ⊑ y coming from how degenerate blocks may split.

    Zeros of x stay zeros of y, positive ties of y are ties of x, the zero
    block of x sits inside the zero block of y and every non-zero block of
    y refines some non-zero block of x.
    """
    _same_dim(x, y)
    xs, ys = x.entries, y.entries
    n = x.n
    for i in range(n):
        if xs[i] == 0 and ys[i] != 0:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            if ys[i] == ys[j] > 0 and xs[i] != xs[j]:
                return False
    rx, ry = spectral_rep(x), spectral_rep(y)
    if not rx.I0 <= ry.I0:
        return False
    x_nonzero = rx.blocks[: rx.n0]
    for block in ry.blocks[: ry.n0]:
        if not any(block <= bx for bx in x_nonzero):
            return False
    return True
