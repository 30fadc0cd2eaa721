from fractions import Fraction

from hypothesis import strategies as st

from entgeo import Dist


@st.composite
def dists(draw, n=None, max_den=12, min_n=2, max_n=5):
    """Exact-rational distributions with a common denominator."""
    if n is None:
        n = draw(st.integers(min_n, max_n))
    d = draw(st.integers(1, max_den))
    cuts = sorted(draw(st.lists(st.integers(0, d), min_size=n - 1, max_size=n - 1)))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [d])]
    return Dist(Fraction(p, d) for p in parts)


@st.composite
def dist_pairs(draw, max_den=12):
    n = draw(st.integers(2, 5))
    return draw(dists(n=n, max_den=max_den)), draw(dists(n=n, max_den=max_den))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
