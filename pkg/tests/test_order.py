from fractions import Fraction as F

import pytest
from _oracles import has_joint_monotonization, leq_by_permutation_scan
from conftest import dist_pairs, dists
from hypothesis import given, settings

from entgeo import (
    DimensionError,
    Dist,
    Perm,
    bottom,
    compare,
    degeneration_necessary,
    is_maximal,
    joint_monotonization,
    leq,
    leq_inductive,
    monotonize,
    simplex_grid,
)
from entgeo.dist import monotonizes


def D(*v):
    return Dist([F(x) for x in v])


class TestJointMonotonization:
    def test_examples(self):
        assert joint_monotonization(D("1/2", "1/4", "1/4"), D("3/4", "1/8", "1/8")) == Perm.identity(3)
        assert joint_monotonization(D("3/5", "3/10", "1/10"), D("1/10", "3/10", "3/5")) is None

    def test_bottom_takes_witness_of_other(self):
        y = D("1/6", "1/2", "1/3")
        assert joint_monotonization(bottom(3), y) == monotonize(y).witness

    @given(dist_pairs())
    def test_agrees_with_scan(self, pair):
        x, y = pair
        s = joint_monotonization(x, y)
        assert (s is not None) == has_joint_monotonization(x, y)
        if s is not None:
            assert monotonizes(x, s) and monotonizes(y, s)


class TestLeq:
    def test_examples(self):
        assert leq(D("1/3", "1/3", "1/3"), D("1/2", "1/4", "1/4"))
        assert leq(D("1/2", "1/4", "1/4"), D("3/4", "1/8", "1/8"))
        assert not leq(D("1/2", "1/2", 0), D("1/2", "1/4", "1/4"))
        assert leq(D("7/10", "3/10"), D("9/10", "1/10"))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            leq(D("1/2", "1/2"), bottom(3))

    def test_compare(self):
        assert compare(bottom(3), D(1, 0, 0)) == "lt"
        assert compare(D(1, 0, 0), bottom(3)) == "gt"
        assert compare(bottom(3), bottom(3)) == "eq"
        assert compare(D("3/5", "3/10", "1/10"), D("1/10", "3/10", "3/5")) == "incomparable"

    @given(dist_pairs())
    def test_matches_permutation_scan(self, pair):
        x, y = pair
        assert leq(x, y) == leq_by_permutation_scan(x, y)

    @given(dist_pairs())
    @settings(max_examples=200)
    def test_matches_inductive(self, pair):
        x, y = pair
        assert leq(x, y) == leq_inductive(x, y)

    @given(dists())
    def test_bottom_and_reflexive(self, x):
        assert leq(x, x)
        assert leq(bottom(x.n), x)

    @given(dists(n=3, max_den=6), dists(n=3, max_den=6), dists(n=3, max_den=6))
    def test_transitive(self, x, y, z):
        if leq(x, y) and leq(y, z):
            assert leq(x, z)

    @given(dist_pairs())
    def test_permutation_invariant(self, pair):
        x, y = pair
        s = Perm(reversed(range(1, x.n + 1)))
        assert leq(x, y) == leq(x.permuted(s), y.permuted(s))


class TestInductive:
    def test_examples(self):
        assert leq_inductive(D("3/10", "7/10"), D("1/10", "9/10"))
        assert not leq_inductive(D("3/10", "7/10"), D("9/10", "1/10"))
        assert not leq_inductive(D("9/10", "1/10"), D("3/10", "7/10"))
        assert leq_inductive(D("1/3", "1/3", "1/3"), D("1/2", "1/4", "1/4"))

    def test_exhaustive_small_grids(self):
        for n, d in ((3, 6), (4, 4), (2, 8)):
            g = simplex_grid(n, d)
            assert all(leq(a, b) == leq_inductive(a, b) for a in g for b in g)


class TestMaxAndBottom:
    def test_examples(self):
        assert is_maximal(D(1, 0, 0))
        assert not is_maximal(D("1/2", "1/2", 0))
        assert not is_maximal(bottom(3))
        assert bottom(2) == D("1/2", "1/2")
        assert bottom(3) == D("1/3", "1/3", "1/3")
        with pytest.raises(DimensionError):
            bottom(1)

    def test_maxima_of_grid_are_point_masses(self):
        g = simplex_grid(3, 6)
        tops = [x for x in g if not any(leq(x, y) and x != y for y in g)]
        assert sorted(tops, key=str) == sorted(
            [D(1, 0, 0), D(0, 1, 0), D(0, 0, 1)], key=str
        )


class TestDegeneration:
    def test_examples(self):
        assert degeneration_necessary(D("1/2", "1/4", "1/4"), D("3/4", "1/8", "1/8"))
        assert degeneration_necessary(bottom(3), D("1/6", "1/2", "1/3"))

    def test_necessary_is_not_sufficient(self):
        # refinement of blocks alone does not force comparability
        x, y = D("1/2", "1/4", "1/4"), D("1/2", "3/8", "1/8")
        assert degeneration_necessary(x, y)
        assert not leq(x, y)

    def test_zero_must_stay_zero(self):
        assert not degeneration_necessary(D("1/2", "1/2", 0), D("1/2", "1/4", "1/4"))

    @given(dist_pairs())
    def test_implied_by_leq(self, pair):
        x, y = pair
        if leq(x, y):
            assert degeneration_necessary(x, y)
