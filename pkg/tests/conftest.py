from fractions import Fraction

import hypothesis
import hypothesis.strategies as st
import pytest

from pipedlab.geometry import EdgeSextuple
from pipedlab.search import SearchConfig, assemble_tetrahedrons

hypothesis.settings.register_profile("default", deadline=None, max_examples=150)
hypothesis.settings.load_profile("default")


def det(rows):
    """Fraction Gaussian elimination; test-side oracle independent of the package."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    out = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            out = -out
        out *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for k in range(col, n):
                m[r][k] -= factor * m[col][k]
    return out


def cayley_menger(edges):
    """288 * (tetrahedron volume)^2 from the six edges.

    Vertices: 0 origin, 1 at u, 2 at v, 3 at w.
    """
    a, b, c, d, e, f = edges
    sq = {
        (0, 1): a * a, (0, 2): c * c, (0, 3): e * e,
        (1, 2): b * b, (1, 3): d * d, (2, 3): f * f,
    }

    def dist(i, j):
        if i == j:
            return 0
        return sq[(min(i, j), max(i, j))]

    rows = [[0, 1, 1, 1, 1]]
    for i in range(4):
        rows.append([1] + [dist(i, j) for j in range(4)])
    return det(rows)


@st.composite
def closing_sextuples(draw, max_edge=60):
    """Integer sextuples whose faces satisfy the strict triangle inequality
    and whose Gram determinant is non-negative."""
    a = draw(st.integers(1, max_edge))
    c = draw(st.integers(1, max_edge))
    e = draw(st.integers(1, max_edge))
    b = draw(st.integers(abs(a - c) + 1, a + c - 1))
    d = draw(st.integers(abs(a - e) + 1, a + e - 1))
    f = draw(st.integers(abs(c - e) + 1, c + e - 1))
    s = EdgeSextuple(a, b, c, d, e, f)
    hypothesis.assume(cayley_menger(s) >= 0)
    return s


_ASSEMBLED = {}


def assembled(bound):
    if bound not in _ASSEMBLED:
        _ASSEMBLED[bound] = sorted(set(assemble_tetrahedrons(SearchConfig(bound, workers=1))))
    return _ASSEMBLED[bound]


def rational_face_sextuples(bound=40):
    """Sextuples with all six face diagonals integer; every family is nontrivial."""
    return st.sampled_from(assembled(bound))


# Acceptance criteria report: one line per criterion after the run.  A
# criterion split over several tests passes only if every part passes.
_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        passed = report.outcome == "passed" and not hasattr(report, "wasxfail")
        _, parts = _CRITERIA.setdefault(number, (title, {}))
        parts[item.name] = passed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, parts = _CRITERIA[number]
        passed = all(parts.values())
        line = f"criterion {number:2d}  {'PASS' if passed else 'FAIL'}  {title}"
        failing = [name for name, ok in parts.items() if not ok]
        if failing:
            line += f"  (failing: {', '.join(failing)})"
        terminalreporter.write_line(line)
