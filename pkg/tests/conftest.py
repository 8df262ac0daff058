import itertools

import pytest

from dchain.chains import Coloring, generate_double_chain
from dchain.geometry import Point, segments_conflict


def all_refs(dc):
    return [(0, i) for i in range(len(dc.c1))] + [(1, j) for j in range(len(dc.c2))]


def naive_noncrossing(points):
    """Definition-level check: pairwise, no acceleration."""
    pts = [Point(*p) for p in points]
    edges = list(zip(pts, pts[1:]))
    for (i, e), (j, f) in itertools.combinations(enumerate(edges), 2):
        if j == i + 1:
            # consecutive edges meet at pts[j]; anything more is a conflict
            a, b = e
            c, d = f
            if _overlap_beyond_joint(a, b, d):
                return False
            continue
        if segments_conflict(e, f):
            return False
    return True


def _overlap_beyond_joint(a, b, d):
    cross = (b.x - a.x) * (d.y - b.y) - (b.y - a.y) * (d.x - b.x)
    if cross != 0:
        return False
    # collinear: they fold back over each other iff the direction reverses
    return (b.x - a.x) * (d.x - b.x) + (b.y - a.y) * (d.y - b.y) < 0


@pytest.fixture
def dc22():
    return generate_double_chain(2, 2)


def coloring(c1, c2):
    return Coloring(c1, c2)


def random_cover(rng, m):
    """Random chain coloring, major color and a random disjoint body cover of
    all its major points (feasible or not)."""
    from dchain.hedgehog import Body, runs_of

    s = "".join(rng.choice("BW") for _ in range(m))
    major = rng.choice("BW")
    flags = [c == major for c in s]
    used = [False] * m
    bodies = []
    for a, b in runs_of(flags):
        cuts = sorted(rng.sample(range(a + 1, b + 1), rng.randint(0, b - a))) if b > a else []
        bounds = [a] + cuts + [b + 1]
        for lo, hi in zip(bounds, bounds[1:]):
            hi -= 1
            head = lo == a and lo > 0 and not used[lo - 1] and rng.random() < 0.5
            tail = hi == b and hi + 1 < m and not used[hi + 1] and rng.random() < 0.5
            lo2, hi2 = lo - head, hi + tail
            for p in range(lo2, hi2 + 1):
                used[p] = True
            bodies.append(Body(lo2, hi2, head, tail))
    for p in range(m):
        if not used[p] and rng.random() < 0.3:
            used[p] = True
            bodies.append(Body(p, p, True, True))
    bodies.sort()
    return s, flags, bodies


def chain_points(m):
    from dchain.chains import generate_double_chain

    return list(generate_double_chain(m, 1).c1.points)


def hedgehog_edges(points, hedgehogs):
    return [(points[u], points[v]) for h in hedgehogs for u, v in zip(h.path, h.path[1:])]


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
