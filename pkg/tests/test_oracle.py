import itertools
import random

import pytest

from dchain.chains import generate_double_chain
from dchain.geometry import edges_noncrossing, in_general_position, segments_conflict
from dchain.oracle import SearchBudget, brute_force_embed, brute_force_nhap, enumerate_equitable_colorings
from dchain.trees import subdivided_star

from conftest import all_refs


def dc_points(n1, n2):
    dc = generate_double_chain(n1, n2)
    return [dc.point(*r) for r in all_refs(dc)]


def naive_nhap(pts, cols):
    n = len(pts)
    for perm in itertools.permutations(range(n)):
        if any(cols[perm[i]] == cols[perm[i + 1]] for i in range(n - 1)):
            continue
        if edges_noncrossing([(pts[perm[i]], pts[perm[i + 1]]) for i in range(n - 1)]):
            return True
    return False


def naive_embed(n, edges, vcols, pts, pcols):
    for perm in itertools.permutations(range(n)):
        if any(vcols[v] != pcols[perm[v]] for v in range(n)):
            continue
        segs = [(pts[perm[u]], pts[perm[v]]) for u, v in edges]
        if all(not segments_conflict(segs[i], segs[j])
               for i, j in itertools.combinations(range(len(segs)), 2)
               if not set(edges[i]) & set(edges[j])):
            return True
    return False


def random_points(rng, n):
    while True:
        pts = [(rng.randint(0, 15), rng.randint(0, 15)) for _ in range(n)]
        if len(set(pts)) == n and in_general_position(pts):
            return pts


def test_two_two_monochromatic_chains():
    res = brute_force_nhap(dc_points(2, 2), "BBWW")
    assert res.status == "found"
    w = res.witness
    assert w[0] < w[-1] and sorted(w) == [0, 1, 2, 3]


def test_p4_remark():
    # black at top-left and bottom-right; P4 colored B B W W
    pts = dc_points(2, 2)
    res = brute_force_embed(4, [(0, 1), (1, 2), (2, 3)], "BBWW", pts, "BW" + "WB")
    assert res.status == "none"


def test_subdivided_star_on_monochromatic_chains():
    g = subdivided_star("W")
    res = brute_force_embed(7, g.edges, g.colors, dc_points(4, 3), "WWWW" + "BBB")
    assert res.status == "none"


def test_too_many_black_vertices():
    res = brute_force_embed(4, [(0, 1), (1, 2), (2, 3)], "BWBW", dc_points(2, 2), "BBBW")
    assert res.status == "none" and res.nodes == 0


def test_unbalanced_path_colors():
    res = brute_force_nhap(dc_points(2, 2), "BBBW")
    assert res.status == "none" and res.nodes == 0


def test_rejects_collinear_points():
    with pytest.raises(ValueError):
        brute_force_nhap([(0, 0), (1, 1), (2, 2), (0, 5)], "BWBW")


def test_budget_gives_inconclusive():
    res = brute_force_nhap(dc_points(5, 5), "BWBWBWBWBW", SearchBudget(node_limit=2, time_limit=60))
    assert res.status == "inconclusive" and res.witness is None


def test_deterministic():
    pts = dc_points(6, 5)
    cols = "BBWWBWBWWBW"
    a = brute_force_nhap(pts, cols)
    b = brute_force_nhap(pts, cols)
    assert a == b


def test_colorings():
    assert list(enumerate_equitable_colorings(2)) == ["BW", "WB"]
    four = list(enumerate_equitable_colorings(4))
    assert len(four) == 6 == len(set(four)) and four == sorted(four)
    assert len(list(enumerate_equitable_colorings(10))) == 252
    assert len(list(enumerate_equitable_colorings(5))) == 20


def test_nhap_agrees_with_naive_search():
    rng = random.Random(77)
    answers = set()
    for _ in range(400):
        n = rng.randint(2, 7)
        pts = random_points(rng, n)
        cols = "".join(rng.choice("BW") for _ in range(n))
        res = brute_force_nhap(pts, cols)
        expected = naive_nhap(pts, cols)
        answers.add(expected)
        assert (res.status == "found") == expected, (pts, cols)
        if res.witness:
            w = res.witness
            assert sorted(w) == list(range(n))
            assert all(cols[w[i]] != cols[w[i + 1]] for i in range(n - 1))
            assert edges_noncrossing([(pts[w[i]], pts[w[i + 1]]) for i in range(n - 1)])
    assert answers == {True, False}


def test_embed_agrees_with_naive_search():
    rng = random.Random(78)
    answers = set()
    for _ in range(300):
        n = rng.randint(3, 7)
        pts = random_points(rng, n)
        cand = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = rng.sample(cand, rng.randint(1, min(len(cand), n + 2)))
        vcols = "".join(rng.choice("BW") for _ in range(n))
        pcols = "".join(rng.sample(vcols, n))
        res = brute_force_embed(n, edges, vcols, pts, pcols)
        expected = naive_embed(n, edges, vcols, pts, pcols)
        answers.add(expected)
        assert (res.status == "found") == expected, (pts, edges, vcols, pcols)
        if res.witness:
            w = res.witness
            assert sorted(w) == list(range(n))
            assert all(vcols[v] == pcols[w[v]] for v in range(n))
    assert answers == {True, False}


def test_none_is_stable_under_relabeling():
    pts = dc_points(2, 2)
    cols = "BW" + "WB"
    edges = [(0, 1), (1, 2), (2, 3)]
    for perm in itertools.permutations(range(4)):
        p2 = [pts[i] for i in perm]
        c2 = "".join(cols[i] for i in perm)
        assert brute_force_embed(4, edges, "BBWW", p2, c2).status == "none"
        assert brute_force_nhap(p2, c2).status == "found"
