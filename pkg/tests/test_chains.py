import itertools
import random

import pytest
from hypothesis import given, strategies as st

from dchain.chains import (
    PERIOD_16,
    Coloring,
    DoubleChain,
    compute_stats,
    count_runs,
    generate_double_chain,
    is_compatible,
    is_equitable,
    periodic_coloring_16,
    validate_double_chain,
)
from dchain.geometry import orientation


@pytest.mark.parametrize("n1,n2", [(1, 1), (2, 2), (5, 5), (50, 10), (1, 7), (13, 2)])
def test_generated_chains_validate(n1, n2):
    dc = generate_double_chain(n1, n2)
    assert (len(dc.c1), len(dc.c2)) == (n1, n2)
    assert validate_double_chain(dc)


def test_one_one_upper_above_lower():
    dc = generate_double_chain(1, 1)
    assert dc.c1[0].y > dc.c2[0].y


def test_two_two_visibility_by_hand():
    dc = generate_double_chain(2, 2)
    a, b = dc.c1.points
    for q in dc.c2.points:
        assert orientation(a, b, q) < 0
    c, d = dc.c2.points
    for p in dc.c1.points:
        assert orientation(c, d, p) > 0


def test_generation_is_deterministic():
    assert generate_double_chain(7, 4) == generate_double_chain(7, 4)


def test_all_small_sizes_validate():
    for n1 in range(1, 21):
        for n2 in range(1, 21):
            assert validate_double_chain(generate_double_chain(n1, n2)), (n1, n2)


def test_sampled_sizes_validate():
    rng = random.Random(3)
    for _ in range(8):
        n1, n2 = rng.randint(1, 100), rng.randint(1, 100)
        assert validate_double_chain(generate_double_chain(n1, n2)), (n1, n2)


def test_large_sizes_validate():
    for n1, n2 in [(200, 1), (1, 200), (120, 80)]:
        assert validate_double_chain(generate_double_chain(n1, n2))


def test_rejects_empty_chain():
    with pytest.raises(ValueError):
        generate_double_chain(0, 3)


def test_validator_reports_collinear_points():
    dc = DoubleChain.from_points([(0, 0), (1, 0), (2, 0)], [(0, -10), (2, -10)])
    rep = validate_double_chain(dc)
    assert not rep and "convexity" in rep.violation


def test_validator_reports_visibility():
    # the c2 point sits above the chord through the two outer c1 points
    dc = DoubleChain.from_points([(-2, 4), (0, 0), (2, 4)], [(0, 1)])
    rep = validate_double_chain(dc)
    assert not rep and "visibility" in rep.violation


def test_periodic_coloring():
    assert periodic_coloring_16(16) == "BBWWWWBBBBBBWWWW" == PERIOD_16
    assert periodic_coloring_16(3) == "BBW"
    assert periodic_coloring_16(32) == PERIOD_16 * 2
    for m in range(1, 70):
        s = periodic_coloring_16(m)
        assert all(s[i] == PERIOD_16[i % 16] for i in range(m))
        if m % 16 == 0:
            assert s.count("B") == s.count("W") == m // 2


def test_stats_example():
    st_ = compute_stats(None, Coloring("BWBBW", "WWB"))
    assert (st_.b1, st_.w1, st_.b2, st_.w2) == (3, 2, 1, 2)
    assert (st_.delta, st_.r1, st_.r2) == (1, 2, 1)


def test_stats_monochromatic():
    st_ = compute_stats(None, Coloring("BBBB", "WWW"))
    assert (st_.r1, st_.r2, st_.w1, st_.delta) == (1, 1, 0, 3)


def test_stats_alternating_runs():
    assert count_runs("BWBWBWB", "B") == 4
    st_ = compute_stats(None, Coloring("BWBWBW", "WBWBWB"))
    assert st_.r1 == 3


def test_stats_normalizes_colors():
    st_ = compute_stats(None, Coloring("WWB", "BBW"))
    assert st_.colors_swapped
    assert st_.b1 - st_.w1 >= 0 and st_.w2 - st_.b2 >= 0


@given(st.text("BW", min_size=1, max_size=12), st.text("BW", min_size=1, max_size=12))
def test_stats_identities(c1, c2):
    col = Coloring(c1, c2)
    s = compute_stats(None, col)
    assert s.b1 + s.w1 == len(c1) and s.b2 + s.w2 == len(c2)
    if is_equitable(col) and col.blacks == col.whites:
        assert s.b1 - s.w1 == s.w2 - s.b2 == s.delta
    # runs are separated by minor points
    assert s.r1 <= min(s.b1, s.w1) + 1
    assert s.r2 <= min(s.b2, s.w2) + 1


@pytest.mark.parametrize("c1,c2,expected", [("BBB", "WWW", True), ("BBBB", "WWW", True), ("BBBBB", "WWW", False)])
def test_is_equitable(c1, c2, expected):
    assert is_equitable(Coloring(c1, c2)) is expected


@pytest.mark.parametrize("points,graph,expected", [("BBWW", "BWBW", True), ("BBBW", "BWBW", False), ("BWBW", "BBWW", True)])
def test_is_compatible(points, graph, expected):
    assert is_compatible(points, graph) is expected


def test_is_compatible_size_mismatch():
    with pytest.raises(ValueError):
        is_compatible("BW", "BWB")


def test_coloring_rejects_symbols():
    with pytest.raises(ValueError):
        Coloring("BX", "W")


def test_equitable_count_matches_binomials():
    for n in range(1, 11):
        got = sum(1 for w in itertools.product("BW", repeat=n) if is_equitable("".join(w)))
        from math import comb
        want = comb(n, n // 2) * (1 if n % 2 == 0 else 2)
        assert got == want
