from fractions import Fraction as F

import pytest
from _oracles import automorphisms_bruteforce
from conftest import dists
from hypothesis import given

from entgeo import (
    Coordinate,
    CoordSet,
    DimensionError,
    Dist,
    GaugeDomainError,
    InvalidCoordSet,
    Irreducible,
    Perm,
    bottom,
    build_automorphism,
    coordinate_on_axis,
    coordinates_of,
    downset_is_chain,
    entropy_rigidity_check,
    irreducibles,
    is_maximal,
    is_valid_coord_set,
    leq,
    shannon,
    simplex_grid,
    sup_coordinates,
)
from entgeo.coordinates import grid_coordinates, grid_poset
from entgeo.dist import all_perms


def D(*v):
    return Dist([F(x) for x in v])


X = D("1/2", "1/3", "1/6")


class TestDecomposition:
    def test_worked_example(self):
        cs = coordinates_of(X)
        assert [c.dist for c in cs] == [D("3/7", "2/7", "2/7"), D("2/5", "2/5", "1/5")]
        assert cs.axes == (frozenset({1}), frozenset({1, 2}))
        assert [c.ratio for c in cs] == [F(3, 2), F(2)]
        # each coordinate lies below x
        assert all(leq(c.dist, X) for c in cs)

    def test_bottom_and_irreducible(self):
        assert len(coordinates_of(bottom(3))) == 0
        cs = coordinates_of(D("1/2", "1/2", 0))
        assert [c.dist for c in cs] == [D("1/2", "1/2", 0)]
        assert isinstance(cs[0], Irreducible) and cs[0].ratio is None

    def test_sup_examples(self):
        assert sup_coordinates([D("3/7", "2/7", "2/7"), D("2/5", "2/5", "1/5")]) == X
        assert sup_coordinates(CoordSet([], 3)) == bottom(3)
        assert sup_coordinates([D("1/2", "1/2", 0)]) == D("1/2", "1/2", 0)

    @given(dists())
    def test_roundtrip(self, x):
        cs = coordinates_of(x)
        assert is_valid_coord_set(cs)
        assert sup_coordinates(cs) == x
        assert len(cs) == len(set(x.entries)) - 1

    def test_axis_maximality_on_grid(self):
        g = simplex_grid(3, 6)
        for x in g:
            for c in coordinates_of(x):
                for other in grid_coordinates(g, c.axis):
                    if leq(other.dist, x):
                        assert leq(other.dist, c.dist)

    def test_coordinate_on_axis(self):
        c = coordinate_on_axis({1, 2}, 3, F(2))
        assert c.dist == D("2/5", "2/5", "1/5")
        with pytest.raises(InvalidCoordSet):
            coordinate_on_axis({1, 2, 3}, 3, F(2))
        with pytest.raises(InvalidCoordSet):
            coordinate_on_axis({1}, 3, F(1))
        with pytest.raises(InvalidCoordSet):
            Coordinate.from_dist(X)


class TestValidity:
    def test_examples(self):
        assert is_valid_coord_set(coordinates_of(X))
        same_axis = [coordinate_on_axis({1}, 3, F(2)), coordinate_on_axis({1}, 3, F(3))]
        assert not is_valid_coord_set(same_axis)
        assert is_valid_coord_set([coordinate_on_axis({2}, 3, None)])

    def test_irreducible_only_last(self):
        cs = [coordinate_on_axis({1}, 3, None), coordinate_on_axis({1, 2}, 3, F(2))]
        assert not is_valid_coord_set(cs)
        with pytest.raises(InvalidCoordSet):
            sup_coordinates(cs)

    def test_axes_must_nest(self):
        cs = [coordinate_on_axis({1}, 3, F(2)), coordinate_on_axis({2, 3}, 3, F(2))]
        assert not is_valid_coord_set(cs)

    def test_too_many(self):
        cs = [coordinate_on_axis({1}, 3, F(2)), coordinate_on_axis({1, 2}, 3, F(2))]
        assert is_valid_coord_set(cs)
        assert not is_valid_coord_set(cs + [coordinate_on_axis({1, 2}, 3, F(5))])


class TestIrreducibles:
    def test_counts(self):
        assert [c.dist for c in irreducibles(2)] == [D(1, 0), D(0, 1)]
        ir3 = [c.dist for c in irreducibles(3)]
        assert len(ir3) == 6
        assert sum(is_maximal(x) for x in ir3) == 3
        assert D("1/2", "1/2", 0) in ir3
        assert len(irreducibles(4)) == 14
        with pytest.raises(DimensionError):
            irreducibles(1)


class TestDownsets:
    def test_examples(self):
        g = simplex_grid(3, 6)
        assert downset_is_chain(D("2/3", "1/6", "1/6"), g)
        # three spectral values, so not a coordinate: (1/2,1/2,0) and
        # (1/2,1/3,1/6) both sit below it and are incomparable
        assert not downset_is_chain(D("2/3", "1/3", 0), g)
        assert not downset_is_chain(X, g + [c.dist for c in coordinates_of(X)])
        assert downset_is_chain(bottom(3), g)

    def test_chain_iff_coordinate_when_witnesses_present(self):
        # downsets are tested on the grid together with every grid point's
        # coordinates, so the incomparable pair below a non-coordinate exists
        g = simplex_grid(3, 6)
        extra = {c.dist for x in g for c in coordinates_of(x)}
        pts = sorted(set(g) | extra, key=str)
        for x in pts:
            if is_maximal(x):
                continue
            assert downset_is_chain(x, pts) == (len(set(x.entries)) <= 2)


class TestAutomorphisms:
    def test_identity(self):
        h = build_automorphism(Perm.identity(3))
        assert all(h(x) == x for x in simplex_grid(3, 6))

    def test_relabel(self):
        h = build_automorphism(Perm([2, 1, 3]))
        assert h(X) == D("1/3", "1/2", "1/6")

    def test_gauge_moves_exactly_its_axis(self):
        g = simplex_grid(3, 6)
        h = build_automorphism(Perm.identity(3), {(1,): lambda r: r * r}, domain=g)
        for x in g:
            on_axis = any(c.axis == {1} and c.ratio is not None for c in coordinates_of(x))
            assert (h(x) != x) == on_axis

    def test_order_preserved_and_reflected(self):
        g = simplex_grid(3, 6)
        gauges = {(1,): lambda r: r * r, (2, 3): lambda r: r + 1, (1, 3): lambda r: 3 * r - 2}
        for s in all_perms(3):
            h = build_automorphism(s, gauges, domain=g)
            img = [h(x) for x in g]
            assert len(set(img)) == len(g)
            for x, hx in zip(g, img):
                for y, hy in zip(g, img):
                    assert leq(x, y) == leq(hx, hy)

    def test_bad_gauges(self):
        g = simplex_grid(2, 6)
        with pytest.raises(GaugeDomainError):
            build_automorphism(Perm.identity(2), {(1,): lambda r: 1 / r}, domain=g)
        with pytest.raises(GaugeDomainError):
            build_automorphism(Perm.identity(2), {(1,): lambda r: 10 - r}, domain=g)
        with pytest.raises(GaugeDomainError):
            build_automorphism(Perm.identity(2), {(1, 2): lambda r: r}, domain=g)

    def test_mapping_gauge(self):
        h = build_automorphism(Perm.identity(2), {(1,): {F(2): F(3)}})
        assert h(D("2/3", "1/3")) == D("3/4", "1/4")
        with pytest.raises(GaugeDomainError):
            h(D("5/6", "1/6"))


class TestRigidity:
    def test_examples(self):
        assert entropy_rigidity_check(2, simplex_grid(2, 4))
        assert entropy_rigidity_check(3, simplex_grid(3, 6))
        assert entropy_rigidity_check(3, [bottom(3), D(1, 0, 0), D(0, 1, 0), D(0, 0, 1)])

    def test_against_bruteforce(self):
        for d in (4, 6):
            g = simplex_grid(2, d)
            P = grid_poset(g)
            auts = automorphisms_bruteforce(P.elements, P.leq)
            # without constraints the swap of the two labels survives
            assert len(auts) == 2
            by_name = {str(x): x for x in g}
            fixing = [
                f
                for f in auts
                if all(f[k] == k for k, x in by_name.items() if is_maximal(x))
                and all(
                    abs(shannon(by_name[k]) - shannon(by_name[v])) < 1e-12 for k, v in f.items()
                )
            ]
            assert len(fixing) == 1
