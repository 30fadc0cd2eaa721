import pytest

from entgeo import DimensionError
from entgeo.verify import SUITES, PropertyResult, format_result, run_suite, run_suites


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_passes_on_small_grid(name):
    results = run_suite(name, 3, 4)
    assert results
    assert all(r.passed for r in results if not r.exploratory), [format_result(r) for r in results]


def test_all_on_two_point_grid():
    results = run_suites("all", 2, 8)
    assert all(r.passed for r in results)
    assert len({r.name for r in results}) == len(results)


def test_names_are_namespaced():
    for r in run_suites("all", 3, 3):
        assert r.name.split("/")[0] in SUITES


def test_bad_arguments():
    with pytest.raises(DimensionError):
        run_suites("order-axioms", 1, 6)
    with pytest.raises(DimensionError):
        run_suite("order-axioms", 3, 0)
    with pytest.raises(KeyError):
        run_suites("nope", 3, 6)


def test_format():
    assert format_result(PropertyResult("a/b", 4, True)) == "PASS a/b instances=4"
    assert format_result(PropertyResult("a/b", 2, False, "x | y")) == "FAIL a/b instances=2 counterexample=x | y"
    assert format_result(PropertyResult("a/b", 2, False, "x", True)).startswith("WARN")


def test_parallel_is_deterministic():
    assert run_suites("all", 3, 4, jobs=3) == run_suites("all", 3, 4, jobs=1)
