"""Exhaustive property sweeps over exact-rational grids.

Each suite returns a list of ``PropertyResult``; the CLI ``verify``
command prints them one per line.  Exploratory results are reported but
never make a run fail.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from .construction import (
    GammaChain,
    alt_form,
    build,
    check_classical_iso,
    check_monotone_states,
    from_alt_form,
    is_partial_order,
)
from .coordinates import (
    build_automorphism,
    coordinates_of,
    downset_is_chain,
    entropy_rigidity_check,
    grid_coordinates,
    irreducibles,
    sup_coordinates,
)
from .dist import Dist, Perm, all_perms, monotonizes, simplex_grid, spectral_rep
from .entropy import TOL, mixing_law_check, shannon
from .errors import DimensionError
from .order import (
    bottom,
    degeneration_necessary,
    is_maximal,
    joint_monotonization,
    leq,
    leq_inductive,
)
from .poset import (
    automorphisms,
    maximal_chains,
    parse_subset,
    powerset_lattice,
    random_graded_poset,
    strip_and_reverse,
)

__all__ = ["PropertyResult", "SUITES", "run_suite", "run_suites", "format_result"]


@dataclass(frozen=True)
class PropertyResult:
    name: str
    instances: int
    passed: bool
    counterexample: Optional[str] = None
    exploratory: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def _check(name: str, cases, pred: Callable, exploratory: bool = False) -> PropertyResult:
    count = 0
    for case in cases:
        count += 1
        if not pred(*case):
            shown = " | ".join(str(c) for c in case)
            return PropertyResult(name, count, False, shown, exploratory)
    return PropertyResult(name, count, True, None, exploratory)


def suite_order_axioms(n: int, d: int) -> list[PropertyResult]:
    g = simplex_grid(n, d)
    rel = {(a, b): leq(a, b) for a in g for b in g}
    return [
        _check("order-axioms/reflexive", ((x,) for x in g), lambda x: rel[x, x]),
        _check(
            "order-axioms/antisymmetric",
            ((x, y) for x in g for y in g),
            lambda x, y: not (rel[x, y] and rel[y, x]) or x == y,
        ),
        _check(
            "order-axioms/transitive",
            ((x, y, z) for x in g for y in g if rel[x, y] for z in g),
            lambda x, y, z: not rel[y, z] or rel[x, z],
        ),
        _check("order-axioms/bottom", ((x,) for x in g), lambda x: leq(bottom(n), x)),
        _check(
            "order-axioms/maxima-are-point-masses",
            ((x,) for x in g),
            lambda x: is_maximal(x) == all(y == x or not rel[x, y] for y in g),
        ),
    ]


def _exists_joint(x: Dist, y: Dist) -> bool:
    return any(monotonizes(x, s) and monotonizes(y, s) for s in all_perms(x.n))


def suite_equivalence(n: int, d: int) -> list[PropertyResult]:
    g = simplex_grid(n, d)
    pairs = [(x, y) for x in g for y in g]
    out = [_check("equivalence/leq-vs-inductive", pairs, lambda x, y: leq(x, y) == leq_inductive(x, y))]
    if n <= 6:
        out.append(
            _check(
                "equivalence/joint-monotonization-vs-scan",
                pairs,
                lambda x, y: (joint_monotonization(x, y) is not None) == _exists_joint(x, y),
            )
        )
    return out


def suite_entropy(n: int, d: int) -> list[PropertyResult]:
    g = simplex_grid(n, d)
    comparable = [(x, y) for x in g for y in g if x != y and leq(x, y)]
    ps = [Fraction(k, 4) for k in range(5)]
    return [
        _check(
            "entropy/strictly-antitone",
            comparable,
            lambda x, y: float(shannon(x)) - float(shannon(y)) > 1e-9,
        ),
        _check(
            "entropy/permutation-invariant",
            ((x, s) for x in g for s in all_perms(n)),
            lambda x, s: abs(shannon(x) - shannon(x.permuted(s))) <= TOL,
        ),
        _check(
            "entropy/mixing-law",
            ((x, y, p) for x, y in comparable for p in ps),
            mixing_law_check,
            exploratory=n > 2,
        ),
    ]


def suite_degeneration(n: int, d: int) -> list[PropertyResult]:
    g = simplex_grid(n, d)
    perms = all_perms(n)
    return [
        _check(
            "degeneration/necessary",
            ((x, y) for x in g for y in g if leq(x, y)),
            degeneration_necessary,
        ),
        _check(
            "degeneration/permutation-equivariance",
            ((x, y, s) for x in g for y in g for s in perms),
            lambda x, y, s: leq(x, y) == leq(x.permuted(s), y.permuted(s)),
        ),
        _check(
            "degeneration/block-criterion",
            ((x, s) for x in g for s in perms),
            _block_criterion,
        ),
    ]


def _block_criterion(x: Dist, s: Perm) -> bool:
    rep = spectral_rep(x)
    blockwise = all(s.image(K) == I for K, I in zip(rep.K, rep.blocks))
    return monotonizes(x, s) == blockwise


def _axis_maximal(x: Dist, coords_by_axis) -> bool:
    for c in coordinates_of(x):
        for other in coords_by_axis.get(c.axis, ()):
            if leq(other.dist, x) and not leq(other.dist, c.dist):
                return False
        if not leq(c.dist, x):
            return False
    return True


def suite_decomposition(n: int, d: int) -> list[PropertyResult]:
    g = simplex_grid(n, d)
    by_axis: dict = {}
    for c in grid_coordinates(g):
        by_axis.setdefault(c.axis, []).append(c)
    witnesses = list(dict.fromkeys(g + [c.dist for x in g for c in coordinates_of(x)]))
    irr = [u.dist for u in irreducibles(n)]
    lower_pool = list(dict.fromkeys(g + irr))
    pure = [Dist([1 if k == i else 0 for k in range(n)]) for i in range(n)]

    def inf_of_pure(u: Dist) -> bool:
        above = [e for e in pure if leq(u, e)]
        lbs = [y for y in lower_pool if all(leq(y, e) for e in above)]
        return u in lbs and all(leq(y, u) for y in lbs)

    def chain_iff_coord(x: Dist) -> bool:
        # grid augmented with every coordinate of every grid point
        binary = len(x.spectrum()) <= 2
        if binary and min(x.entries) > 0 and not downset_is_chain(x, witnesses):
            return False
        if downset_is_chain(x, witnesses) and not binary:
            return False
        return True

    return [
        _check("decomposition/roundtrip", ((x,) for x in g), lambda x: sup_coordinates(coordinates_of(x)) == x),
        _check("decomposition/upper-bound-and-axis-maximal", ((x,) for x in g), lambda x: _axis_maximal(x, by_axis)),
        _check("decomposition/downset-chain-iff-coordinate", ((x,) for x in g), chain_iff_coord),
        _check("decomposition/irreducible-is-infimum-of-pure-states", ((u,) for u in irr), inf_of_pure),
    ]


def _mchain_bijection(n: int) -> bool:
    chains = maximal_chains(strip_and_reverse(powerset_lattice(n)))
    if len(chains) != factorial(n):
        return False
    sigmas = set()
    for chain in chains:
        sets = [parse_subset(e) for e in chain]
        prev: frozenset = frozenset()
        images = []
        for s in sets:
            new = s - prev
            if len(new) != 1:
                return False
            images.append(next(iter(new)))
            prev = s
        images.append(next(iter(frozenset(range(1, n + 1)) - prev)))
        sigma = Perm(images)
        rebuilt = tuple(
            "{" + ",".join(str(j) for j in sorted(sigma.image(range(1, i + 1)))) + "}" for i in range(1, n)
        )
        if rebuilt != chain:
            return False
        sigmas.add(sigma)
    return len(sigmas) == factorial(n)


def suite_construction(n: int, d: int, seed: int = 0) -> list[PropertyResult]:
    rng = random.Random(seed)
    posets = [(random_graded_poset(rng, 8), GammaChain.uniform(rng.randint(0, 1))) for _ in range(50)]

    def poset_with_bottom(A, gamma) -> bool:
        P = build(A, gamma)
        return is_partial_order(P.order) and len(P.bottom_classes()) == 1

    def alt_bijection(A, gamma) -> bool:
        P = build(A, gamma)
        forms = alt_form(A, gamma)
        return len(set(forms)) == len(P) and [from_alt_form(P, f) for f in forms] == P.classes

    iso_cases = [(m, k) for m, k in [(2, 1), (2, 2), (3, 1), (4, 1)] if m <= max(n, 2)]
    return [
        _check("construction/poset-with-bottom", posets, poset_with_bottom),
        _check("construction/alt-form-bijection", posets, alt_bijection),
        _check("construction/mchain-count-and-bijection", ((m,) for m in range(2, 6)), _mchain_bijection),
        _check(
            "construction/classical-iso",
            ((m, GammaChain.uniform(k)) for m, k in iso_cases),
            lambda m, gamma: len(check_classical_iso(m, gamma)) > 0,
        ),
        _check(
            "construction/monotone-states",
            ((m, GammaChain.uniform(k)) for m in (3, 4, 5) for k in (0, 1)),
            check_monotone_states,
        ),
    ]


def _gauge_samples(n: int, seed: int = 0):
    rng = random.Random(seed)
    axes = [u.axis for u in irreducibles(n)]
    families = [lambda r: r * r, lambda r: r + 1, lambda r: 3 * r - 2, lambda r: (r * r + r) / 2]
    out = []
    for _ in range(10):
        sigma = Perm(rng.sample(range(1, n + 1), n))
        chosen = rng.sample(axes, rng.randint(0, len(axes)))
        out.append((sigma, {a: rng.choice(families) for a in chosen}))
    return out


def suite_isomorphisms(n: int, d: int) -> list[PropertyResult]:
    g = simplex_grid(n, d)
    rel = {(a, b): leq(a, b) for a in g for b in g}

    def is_order_iso(sigma, gauges) -> bool:
        h = build_automorphism(sigma, gauges, domain=g)
        img = {x: h(x) for x in g}
        if len(set(img.values())) != len(g):
            return False
        return all(rel[x, y] == leq(img[x], img[y]) for x in g for y in g)

    results = [
        _check("isomorphisms/gauged-automorphisms", _gauge_samples(n), is_order_iso),
        _check("isomorphisms/entropy-rigidity", [(n, g)], entropy_rigidity_check),
    ]
    if n <= 3:
        def aut_count(m):
            P = build(powerset_lattice(m), GammaChain.uniform(1))
            return len(automorphisms(P.to_poset())) == factorial(m)

        results.append(_check("isomorphisms/aut-count-is-n-factorial", ((m,) for m in range(2, n + 1)), aut_count))
    return results


SUITES: dict[str, Callable[[int, int], list[PropertyResult]]] = {
    "order-axioms": suite_order_axioms,
    "equivalence": suite_equivalence,
    "entropy": suite_entropy,
    "degeneration": suite_degeneration,
    "decomposition": suite_decomposition,
    "construction": suite_construction,
    "isomorphisms": suite_isomorphisms,
}


def run_suite(name: str, n: int, d: int) -> list[PropertyResult]:
    if n < 2:
        raise DimensionError(f"n >= 2 required, got {n}")
    if d < 1:
        raise DimensionError(f"grid denominator must be positive, got {d}")
    return SUITES[name](n, d)


def run_suites(name: str, n: int, d: int, jobs: int = 1) -> list[PropertyResult]:
    names = list(SUITES) if name == "all" else [name]
    if name != "all" and name not in SUITES:
        raise KeyError(name)
    if n < 2:
        raise DimensionError(f"n >= 2 required, got {n}")
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            batches = list(ex.map(run_suite, names, [n] * len(names), [d] * len(names)))
    else:
        batches = [run_suite(s, n, d) for s in names]
    return [r for batch in batches for r in batch]


def format_result(r: PropertyResult) -> str:
    status = "PASS" if r.passed else ("WARN" if r.exploratory else "FAIL")
    line = f"{status} {r.name} instances={r.instances}"
    if r.counterexample is not None:
        line += f" counterexample={r.counterexample}"
    return line
