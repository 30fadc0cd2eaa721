"""Finite posets with named elements.

A poset is stored as a boolean order matrix (reflexive and transitive),
so comparability tests are O(1).  The cover relation is recomputed as
the transitive reduction when needed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .errors import (
    CycleError,
    DimensionError,
    DuplicateCoverError,
    NotALatticeError,
    NotBoundedError,
    NotOrthocomplementationError,
    SizeLimitError,
    UnknownElementError,
)

__all__ = [
    "FinitePoset",
    "MaxChain",
    "OrthoStructure",
    "from_covers",
    "strip_and_reverse",
    "maximal_chains",
    "powerset_lattice",
    "chain_poset",
    "subset_name",
    "parse_subset",
    "boolean_complement",
    "automorphisms",
    "is_orthoadditive_measure",
    "to_dot",
    "load_poset",
    "dump_poset",
    "load_ortho",
    "random_graded_poset",
    "AUTOMORPHISM_SIZE_LIMIT",
]

AUTOMORPHISM_SIZE_LIMIT = 10_000

MaxChain = tuple[str, ...]


def _closure(m: np.ndarray) -> np.ndarray:
    m = m.copy()
    for k in range(m.shape[0]):
        m |= np.outer(m[:, k], m[k, :])
    return m


class FinitePoset:
    """Immutable finite poset.

    ``le[i, j]`` is True when element i is below or equal to element j.
    """

    def __init__(self, elements: Sequence[str], le: np.ndarray):
        self.elements: tuple[str, ...] = tuple(elements)
        self.index: dict[str, int] = {e: i for i, e in enumerate(self.elements)}
        le = np.array(le, dtype=bool)
        le.setflags(write=False)
        self.le = le
        self._covers: Optional[tuple[tuple[str, str], ...]] = None

    @classmethod
    def from_covers(cls, elements: Sequence[str], covers: Iterable[Sequence[str]]) -> "FinitePoset":
        elements = [str(e) for e in elements]
        if len(set(elements)) != len(elements):
            raise DuplicateCoverError("element names must be distinct")
        index = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        m = np.eye(n, dtype=bool)
        seen = set()
        for pair in covers:
            lo, hi = (str(p) for p in pair)
            for e in (lo, hi):
                if e not in index:
                    raise UnknownElementError(e)
            if (lo, hi) in seen:
                raise DuplicateCoverError(f"cover ({lo}, {hi}) listed twice")
            if lo == hi:
                raise CycleError(f"self-cover on {lo}")
            seen.add((lo, hi))
            m[index[lo], index[hi]] = True
        m = _closure(m)
        both = m & m.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = map(int, np.argwhere(both)[0])
            raise CycleError(f"cover relation has a cycle through {elements[i]} and {elements[j]}")
        return cls(elements, m)

    @classmethod
    def from_relation(cls, elements: Sequence[str], rel) -> "FinitePoset":
        """Build from a full order relation, which must already be a partial order."""
        m = np.array(rel, dtype=bool)
        n = len(elements)
        if m.shape != (n, n):
            raise DimensionError("relation shape does not match the element list")
        if not m.diagonal().all():
            raise ValueError("relation is not reflexive")
        both = m & m.T
        np.fill_diagonal(both, False)
        if both.any():
            raise CycleError("relation is not antisymmetric")
        if not (_closure(m) == m).all():
            raise ValueError("relation is not transitive")
        return cls([str(e) for e in elements], m)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements, {len(self.covers)} covers)"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinitePoset)
            and self.elements == other.elements
            and bool((self.le == other.le).all())
        )

    def leq(self, a: str, b: str) -> bool:
        return bool(self.le[self.index[a], self.index[b]])

    def lt(self, a: str, b: str) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: str, b: str) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    @property
    def covers(self) -> tuple[tuple[str, str], ...]:
        """Transitive reduction, sorted by element position."""
        if self._covers is None:
            strict = self.le.copy()
            np.fill_diagonal(strict, False)
            s = strict.astype(np.int64)
            red = strict & ~((s @ s) > 0)
            self._covers = tuple(
                (self.elements[i], self.elements[j]) for i, j in map(tuple, np.argwhere(red))
            )
        return self._covers

    def upper_covers(self, a: str) -> list[str]:
        return [hi for lo, hi in self.covers if lo == a]

    def lower_covers(self, a: str) -> list[str]:
        return [lo for lo, hi in self.covers if hi == a]

    def maximal_elements(self) -> list[str]:
        return [e for i, e in enumerate(self.elements) if self.le[i].sum() == 1]

    def minimal_elements(self) -> list[str]:
        return [e for i, e in enumerate(self.elements) if self.le[:, i].sum() == 1]

    @property
    def top(self) -> Optional[str]:
        full = np.where(self.le.all(axis=0))[0]
        return self.elements[full[0]] if len(full) == 1 else None

    @property
    def bottom(self) -> Optional[str]:
        full = np.where(self.le.all(axis=1))[0]
        return self.elements[full[0]] if len(full) == 1 else None

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.elements, self.le.T)

    def subposet(self, keep: Iterable[str]) -> "FinitePoset":
        keep = set(keep)
        idx = [i for i, e in enumerate(self.elements) if e in keep]
        return FinitePoset([self.elements[i] for i in idx], self.le[np.ix_(idx, idx)])

    def is_chain(self) -> bool:
        return bool((self.le | self.le.T).all())

    # lattice operations (None when the bound does not exist)

    def join(self, a: str, b: str) -> Optional[str]:
        ia, ib = self.index[a], self.index[b]
        ub = np.where(self.le[ia] & self.le[ib])[0]
        for u in ub:
            if self.le[u, ub].all():
                return self.elements[u]
        return None

    def meet(self, a: str, b: str) -> Optional[str]:
        ia, ib = self.index[a], self.index[b]
        lb = np.where(self.le[:, ia] & self.le[:, ib])[0]
        for u in lb:
            if self.le[lb, u].all():
                return self.elements[u]
        return None

    def is_lattice(self) -> bool:
        return all(
            self.join(a, b) is not None and self.meet(a, b) is not None
            for a, b in combinations(self.elements, 2)
        ) and len(self) > 0

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers]}


def from_covers(elements: Sequence[str], covers: Iterable[Sequence[str]]) -> FinitePoset:
    return FinitePoset.from_covers(elements, covers)


def strip_and_reverse(A: FinitePoset) -> FinitePoset:
    """Remove top and bottom, then reverse the order on what remains."""
    top, bot = A.top, A.bottom
    if top is None or bot is None:
        raise NotBoundedError("poset needs a unique top and a unique bottom")
    return A.subposet(e for e in A.elements if e not in (top, bot)).dual()


def maximal_chains(P: FinitePoset) -> list[MaxChain]:
    """Every maximal chain once, listed top-down, in lexicographic element order."""
    if len(P) == 0:
        return [()]
    lower = {e: [] for e in P.elements}
    for lo, hi in P.covers:
        lower[hi].append(lo)
    for e in lower:
        lower[e].sort(key=P.index.__getitem__)
    out: list[MaxChain] = []
    stack = [(m,) for m in reversed(P.maximal_elements())]
    while stack:
        path = stack.pop()
        below = lower[path[-1]]
        if not below:
            out.append(path)
            continue
        for lo in reversed(below):
            stack.append(path + (lo,))
    return out


def subset_name(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


def parse_subset(name: str) -> frozenset[int]:
    body = name.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"not a subset name: {name!r}")
    body = body[1:-1].strip()
    return frozenset(int(t) for t in body.split(",")) if body else frozenset()


def powerset_lattice(n: int) -> FinitePoset:
    """Subsets of {1..n} under inclusion, named like ``{1,3}``."""
    if n < 1:
        raise DimensionError(f"powerset_lattice needs n >= 1, got {n}")
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    covers = [
        (subset_name(s), subset_name(s | {i}))
        for s in subsets
        for i in range(1, n + 1)
        if i not in s
    ]
    return FinitePoset.from_covers([subset_name(s) for s in subsets], covers)


def chain_poset(m: int) -> FinitePoset:
    """The m-element chain c0 < c1 < ... < c(m-1)."""
    if m < 2:
        raise DimensionError(f"chain_poset needs m >= 2, got {m}")
    names = [f"c{i}" for i in range(m)]
    return FinitePoset.from_covers(names, zip(names, names[1:]))


def _signature(P: FinitePoset) -> list[tuple]:
    le = P.le
    up = le.sum(axis=1)
    down = le.sum(axis=0)
    ucov = {e: 0 for e in P.elements}
    dcov = {e: 0 for e in P.elements}
    for lo, hi in P.covers:
        ucov[lo] += 1
        dcov[hi] += 1
    return [(int(up[i]), int(down[i]), ucov[e], dcov[e]) for i, e in enumerate(P.elements)]


def automorphisms(P: FinitePoset, colors: Optional[Mapping[str, object]] = None) -> list[dict[str, str]]:
    """All order-automorphisms, optionally restricted to colour-preserving ones.

    Backtracking over elements; each element may only map to elements with
    the same up/down-set sizes, cover degrees and colour, and every partial
    assignment must preserve and reflect the order.
    """
    n = len(P)
    if n > AUTOMORPHISM_SIZE_LIMIT:
        raise SizeLimitError(f"{n} elements exceeds the automorphism search limit")
    sig = _signature(P)
    if colors is not None:
        sig = [s + (repr(colors[e]),) for s, e in zip(sig, P.elements)]
    classes: dict[tuple, list[int]] = {}
    for i, s in enumerate(sig):
        classes.setdefault(s, []).append(i)
    order = sorted(range(n), key=lambda i: (len(classes[sig[i]]), i))
    le = P.le
    image = [-1] * n
    used = [False] * n
    done: list[int] = []
    found: list[dict[str, str]] = []

    def consistent(a: int, b: int) -> bool:
        for p in done:
            q = image[p]
            if le[a, p] != le[b, q] or le[p, a] != le[q, b]:
                return False
        return True

    def rec(k: int) -> None:
        if k == n:
            found.append({P.elements[i]: P.elements[image[i]] for i in range(n)})
            return
        a = order[k]
        for b in classes[sig[a]]:
            if used[b] or not consistent(a, b):
                continue
            image[a], used[b] = b, True
            done.append(a)
            rec(k + 1)
            done.pop()
            image[a], used[b] = -1, False

    rec(0)
    return found


@dataclass(frozen=True)
class OrthoStructure:
    """A candidate orthocomplementation a -> a'."""

    complement: Mapping[str, str]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[str]]) -> "OrthoStructure":
        comp: dict[str, str] = {}
        for a, b in pairs:
            a, b = str(a), str(b)
            for x, y in ((a, b), (b, a)):
                if comp.get(x, y) != y:
                    raise NotOrthocomplementationError(f"{x} paired with both {comp[x]} and {y}")
                comp[x] = y
        return cls(comp)

    def __call__(self, a: str) -> str:
        return self.complement[a]


def boolean_complement(n: int) -> OrthoStructure:
    full = frozenset(range(1, n + 1))
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    return OrthoStructure({subset_name(s): subset_name(full - s) for s in subsets})


def _check_ortho(L: FinitePoset, ortho: OrthoStructure) -> None:
    comp = ortho.complement
    for a in L.elements:
        if a not in comp or comp[a] not in L.index:
            raise NotOrthocomplementationError(f"no complement for {a}")
        if comp[comp[a]] != a:
            raise NotOrthocomplementationError(f"complement is not involutive at {a}")
    top, bot = L.top, L.bottom
    for a in L.elements:
        if L.meet(a, comp[a]) != bot or L.join(a, comp[a]) != top:
            raise NotOrthocomplementationError(f"{a} and {comp[a]} are not complements")
    for a in L.elements:
        for b in L.elements:
            if L.leq(a, b) and not L.leq(comp[b], comp[a]):
                raise NotOrthocomplementationError(f"complement is not antitone on {a} <= {b}")


def is_orthoadditive_measure(L: FinitePoset, ortho: OrthoStructure, omega: Mapping[str, object]) -> bool:
    """Whether omega is a normalized [0,1]-valued map additive on orthogonal pairs.

    a and b are orthogonal when a <= b'.
    """
    from fractions import Fraction

    if not L.is_lattice():
        raise NotALatticeError("input poset is not a lattice")
    _check_ortho(L, ortho)
    try:
        w = {e: Fraction(omega[e]) for e in L.elements}
    except KeyError:
        return False
    if any(v < 0 or v > 1 for v in w.values()) or w[L.top] != 1:
        return False
    comp = ortho.complement
    for a in L.elements:
        for b in L.elements:
            if L.leq(a, comp[b]) and w[L.join(a, b)] != w[a] + w[b]:
                return False
    return True


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(P: FinitePoset, name: str = "P", labels: Optional[Mapping[str, str]] = None) -> str:
    """Graphviz digraph of the cover relation, drawn bottom-up."""
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for e in P.elements:
        if labels and e in labels:
            lines.append(f"  {_dot_id(e)} [label={_dot_id(labels[e])}];")
        else:
            lines.append(f"  {_dot_id(e)};")
    for lo, hi in P.covers:
        lines.append(f"  {_dot_id(lo)} -> {_dot_id(hi)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_poset(src: Union[str, Path, Mapping]) -> FinitePoset:
    data = src if isinstance(src, Mapping) else json.loads(Path(src).read_text())
    if "elements" not in data or "covers" not in data:
        raise ValueError("poset JSON needs 'elements' and 'covers'")
    return FinitePoset.from_covers(data["elements"], data["covers"])


def dump_poset(P: FinitePoset, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(P.to_json(), indent=2) + "\n")


def load_ortho(src: Union[str, Path, Mapping]) -> OrthoStructure:
    data = src if isinstance(src, Mapping) else json.loads(Path(src).read_text())
    return OrthoStructure.from_pairs(data["pairs"])


def random_graded_poset(rng, max_elements: int = 8) -> FinitePoset:
    """A random bounded poset whose interior is graded by levels.

    Covers only join consecutive levels and every interior element has at
    least one cover up and down, so all maximal chains of the stripped poset
    have the same length.
    """
    budget = max_elements - 2
    if budget < 1:
        raise DimensionError("need room for at least one interior element")
    nlevels = rng.randint(1, min(3, budget))
    sizes = [1] * nlevels
    for _ in range(rng.randint(0, budget - nlevels)):
        sizes[rng.randrange(nlevels)] += 1
    levels, names = [], ["0"]
    for li, size in enumerate(sizes):
        lvl = [f"l{li + 1}_{k}" for k in range(size)]
        levels.append(lvl)
        names.extend(lvl)
    names.append("1")
    covers = {("0", e) for e in levels[0]} | {(e, "1") for e in levels[-1]}
    for lo_lvl, hi_lvl in zip(levels, levels[1:]):
        edges = {(lo, hi) for lo in lo_lvl for hi in hi_lvl if rng.random() < 0.5}
        for hi in hi_lvl:
            if not any(h == hi for _, h in edges):
                edges.add((rng.choice(lo_lvl), hi))
        for lo in lo_lvl:
            if not any(l == lo for l, _ in edges):
                edges.add((lo, rng.choice(hi_lvl)))
        covers |= edges
    return FinitePoset.from_covers(names, sorted(covers))
