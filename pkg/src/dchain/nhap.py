"""Non-crossing Hamiltonian alternating paths on 2-colored double-chains.

The construction runs on major/minor flags only.  Internally the chains may
be swapped (rotating the picture by 180 degrees turns the concave chain into
the convex one, with left and right exchanged) and carry virtual points
(the auxiliary points of the case analysis and contracted singletons).  Each
point has an order key along its chain, and crossings are decided from keys:

* chords of one chain cross iff their key intervals interleave;
* an edge inside a chain never crosses an edge between the chains;
* two edges between the chains cross iff their endpoint orders disagree.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

from dchain.chains import Coloring, DoubleChain, ValidationReport, balanced_condition, choose_major, is_equitable
from dchain.geometry import edges_noncrossing
from dchain.hedgehog import Body, Hedgehog, InfeasibleCoverError, cover_with_k_hedgehogs, realize_hedgehogs, runs_of

DEBUG = os.environ.get("DCHAIN_DEBUG", "") not in ("", "0")


class PreconditionError(ValueError):
    pass


class InvariantError(AssertionError):
    pass


@dataclass(frozen=True)
class PathEmbedding:
    """Visiting order of the points, as (chain, position); chain 0 is C1."""

    order: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class ContractionRecord:
    """Contractions in the order applied: (chain, position of the singleton
    in the sequence at that time, color of its removed neighbors)."""

    steps: tuple[tuple[int, int, str], ...]


class _Work:
    """Point table plus the current sequence of point ids on each chain."""

    def __init__(self) -> None:
        self.chain: list[int] = []
        self.key: list[int] = []
        self.major: list[bool] = []
        self.origin: list[tuple[int, int] | None] = []
        self.seq: list[list[int]] = [[], []]

    def add(self, chain: int, key: int, major: bool, origin: tuple[int, int] | None) -> int:
        self.chain.append(chain)
        self.key.append(key)
        self.major.append(major)
        self.origin.append(origin)
        return len(self.chain) - 1

    def flags(self, c: int) -> list[bool]:
        mj = self.major
        return [mj[i] for i in self.seq[c]]

    def runs(self, c: int) -> list[tuple[int, int]]:
        return runs_of(self.flags(c))

    def surplus(self, c: int) -> int:
        f = self.flags(c)
        return 2 * sum(f) - len(f)

    def insert_virtual(self, c: int, *, left_of_first_major: bool) -> int:
        """Extra major point extending the leftmost run on the left, or the
        rightmost run on the right."""
        seq, mj, key = self.seq[c], self.major, self.key
        if left_of_first_major:
            pos = next(i for i, p in enumerate(seq) if mj[p])
            hi = key[seq[pos]]
            lo = key[seq[pos - 1]] if pos > 0 else None
            k = hi - 1 if lo is None or lo < hi - 1 else (lo + hi) / 2
        else:
            pos = max(i for i, p in enumerate(seq) if mj[p]) + 1
            lo = key[seq[pos - 1]]
            hi = key[seq[pos]] if pos < len(seq) else None
            k = lo + 1 if hi is None or hi > lo + 1 else (lo + hi) / 2
        vid = self.add(c, k, True, None)
        seq.insert(pos, vid)
        return vid


def _cross_keyed(a, b, c, d) -> bool:
    """Crossing of edges ab and cd given endpoints as (chain, key) pairs."""
    if a == c or a == d or b == c or b == d:
        return False
    if a[0] == b[0]:
        if c[0] != d[0] or c[0] != a[0]:
            return False
        lo1, hi1 = sorted((a[1], b[1]))
        lo2, hi2 = sorted((c[1], d[1]))
        return lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1
    if c[0] == d[0]:
        return False
    if a[0] != 0:
        a, b = b, a
    if c[0] != 0:
        c, d = d, c
    return (a[1] - c[1]) * (b[1] - d[1]) < 0


def _cross(w: _Work, e: tuple[int, int], f: tuple[int, int]) -> bool:
    ch, k = w.chain, w.key
    a, b = e
    c, d = f
    return _cross_keyed((ch[a], k[a]), (ch[b], k[b]), (ch[c], k[c]), (ch[d], k[d]))


# ---------------------------------------------------------------------------
# hedgehog assembly


def _realize(w: _Work, c: int, bodies: list[Body]) -> list[list[int]]:
    seq = w.seq[c]
    try:
        hs = realize_hedgehogs(w.flags(c), bodies)
    except InfeasibleCoverError as exc:
        raise InvariantError(f"chain {c}: {exc}") from exc
    return [[seq[p] for p in h.path] for h in hs]


def _interleave(upper: list[list[int]], lower: list[list[int]]) -> list[int]:
    path: list[int] = []
    for j, h in enumerate(upper):
        path.extend(h)
        if j < len(lower):
            path.extend(lower[j])
    return path


def _split_runs(runs: list[tuple[int, int]], parts: int, chain: int) -> list[Body]:
    """Cut runs into exactly ``parts`` intervals, cutting left to right."""
    extra = parts - len(runs)
    bodies: list[Body] = []
    for s, e in runs:
        cut = min(extra, e - s)
        extra -= cut
        bodies.extend(Body(p, p, False, False, chain) for p in range(s, s + cut))
        bodies.append(Body(s + cut, e, False, False, chain))
    if extra:
        raise InvariantError("not enough major points to split runs")
    return bodies


def _route_delta_large(w: _Work, delta: int) -> list[int]:
    hs = [_realize(w, c, _split_runs(w.runs(c), delta, c)) for c in (0, 1)]
    return _interleave(hs[0], hs[1])


def _route_equal_runs(w: _Work, delta: int) -> list[int]:
    r1, r2 = w.runs(0), w.runs(1)
    r = len(r1)
    if len(r2) != r or not 1 <= delta < r:
        raise InvariantError(f"equal-runs case with r=({r}, {len(r2)}), delta={delta}")
    up = [Body(s, e, False, False, 0) if j < delta else Body(s - 1, e, True, False, 0) for j, (s, e) in enumerate(r1)]
    low = []
    for j, (s, e) in enumerate(r2):
        if j < delta - 1 or j == r - 1:
            low.append(Body(s, e, False, False, 1))
        else:
            low.append(Body(s, e + 1, False, True, 1))
    return _interleave(_realize(w, 0, up), _realize(w, 1, low))


def _even_runs_case(w: _Work) -> list[int]:
    """Even point count with r1 = r2 or delta >= max(r1, r2)."""
    delta = w.surplus(0)
    if delta != w.surplus(1):
        raise InvariantError("surpluses differ in the even case")
    r1, r2 = len(w.runs(0)), len(w.runs(1))
    if delta >= max(r1, r2):
        return _route_delta_large(w, delta)
    if r1 != r2:
        raise InvariantError("no construction applies")
    if delta == 0:
        w.insert_virtual(0, left_of_first_major=True)
        w.insert_virtual(1, left_of_first_major=False)
        return _even_runs_case(w)
    return _route_equal_runs(w, delta)


def _route_no_singletons(w: _Work, lower: list[Hedgehog]) -> list[int]:
    r1 = w.runs(0)
    r = len(r1)
    if len(lower) != r - 1:
        raise InvariantError("wrong number of lower hedgehogs")
    up = []
    for j, (s, e) in enumerate(r1):
        head = j > 0 and lower[j - 1].tail
        tail = j < r - 1 and lower[j].head
        up.append(Body(s - head, e + tail, head, tail, 0))
    upper = _realize(w, 0, up)
    seq1 = w.seq[1]
    return _interleave(upper, [[seq1[p] for p in h.path] for h in lower])


# ---------------------------------------------------------------------------
# singleton contraction


def _contract(w: _Work, limit: int) -> list[tuple[int, int, int, int]]:
    """Contract up to ``limit`` singletons on chain 0, scanning with a stack.

    Returns (new id, left, singleton, right) per contraction in order.
    """
    out: list[int] = []
    recs: list[tuple[int, int, int, int]] = []
    mj, key = w.major, w.key
    seq = w.seq[0]
    i = 0
    while i < len(seq):
        out.append(seq[i])
        i += 1
        while len(recs) < limit and len(out) >= 3 and mj[out[-1]] == mj[out[-3]] != mj[out[-2]]:
            b, s, a = out.pop(), out.pop(), out.pop()
            nid = w.add(0, key[s], mj[a], None)
            recs.append((nid, a, s, b))
            out.append(nid)
        if len(recs) >= limit:
            out.extend(seq[i:])
            break
    w.seq[0] = out
    return recs


def _expand(w: _Work, path: list[int], recs: list[tuple[int, int, int, int]]) -> list[int]:
    size = len(w.chain)
    nxt = [-1] * size
    prv = [-1] * size
    for u, v in zip(path, path[1:]):
        nxt[u] = v
        prv[v] = u
    head = path[0]
    for nid, a, s, b in reversed(recs):
        u, v = prv[nid], nxt[nid]
        first, last = a, b
        if u >= 0 and v >= 0 and _cross(w, (u, first), (last, v)):
            first, last = b, a
            if _cross(w, (u, first), (last, v)):
                raise InvariantError("contraction cannot be expanded")
        if u >= 0:
            nxt[u] = first
        else:
            head = first
        prv[first] = u
        nxt[first], prv[s] = s, first
        nxt[s], prv[last] = last, s
        nxt[last] = v
        if v >= 0:
            prv[v] = last
    out = []
    p = head
    while p >= 0:
        out.append(p)
        p = nxt[p]
    return out


# ---------------------------------------------------------------------------
# driver


def _prepare(dc_sizes: tuple[int, int], col: Coloring) -> tuple[_Work, bool]:
    n1, n2 = dc_sizes
    major = choose_major(col.c1, col.c2)
    w = _Work()
    f1 = [c == major for c in col.c1]
    f2 = [c != major for c in col.c2]
    swap = len(runs_of(f1)) < len(runs_of(f2))
    if not swap:
        w.seq[0] = [w.add(0, 4 * i, f, (0, i)) for i, f in enumerate(f1)]
        w.seq[1] = [w.add(1, 4 * j, f, (1, j)) for j, f in enumerate(f2)]
    else:
        w.seq[0] = [w.add(0, 4 * i, f2[n2 - 1 - i], (1, n2 - 1 - i)) for i in range(n2)]
        w.seq[1] = [w.add(1, 4 * j, f1[n1 - 1 - j], (0, n1 - 1 - j)) for j in range(n1)]
    return w, swap


def _solve(w: _Work) -> list[int]:
    s1, s2 = w.surplus(0), w.surplus(1)
    eps = s1 - s2
    delta = s2
    r1, r2 = len(w.runs(0)), len(w.runs(1))
    if r1 < r2:
        raise InvariantError("chains not ordered by run count")

    recs: list[tuple[int, int, int, int]] = []
    if r1 != r2 and delta < r1:
        recs = _contract(w, r1 - max(r2, delta))
        r1 -= len(recs)
        if DEBUG and r1 != len(w.runs(0)):
            raise InvariantError("contraction did not reduce runs by one each")

    if r1 == r2 or delta >= r1:
        if eps < 0:
            w.insert_virtual(0, left_of_first_major=True)
        elif eps > 0:
            w.insert_virtual(1, left_of_first_major=False)
        path = _even_runs_case(w)
    else:
        if 4 * (r1 - 1) > len(w.seq[0]):
            raise InvariantError("runs exceed a quarter of the contracted chain")
        if len(w.seq[1]) < r1 - 1:
            raise InvariantError("lower chain too short for the cover")
        lower = cover_with_k_hedgehogs(w.flags(1), r1 - 1, chain=1)
        if eps < 0:
            w.insert_virtual(0, left_of_first_major=False)
        if eps <= 0:
            w.insert_virtual(0, left_of_first_major=True)
        path = _route_no_singletons(w, lower)

    return _finish(w, path, recs)


def _finish(w: _Work, path: list[int], recs: list[tuple[int, int, int, int]]) -> list[int]:
    if recs:
        path = _expand(w, path, recs)
    origin = w.origin
    lo, hi = 0, len(path)
    while lo < hi and origin[path[lo]] is None:
        lo += 1
    while hi > lo and origin[path[hi - 1]] is None:
        hi -= 1
    path = path[lo:hi]
    if DEBUG:
        _check_core(w, path)
    return path


def _check_core(w: _Work, path: list[int]) -> None:
    if any(w.origin[p] is None for p in path):
        raise InvariantError("virtual point inside the path")
    edges = list(zip(path, path[1:]))
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if _cross(w, edges[i], edges[j]):
                raise InvariantError(f"edges {edges[i]} and {edges[j]} cross")


def embed_nhap(dc: DoubleChain | tuple[int, int], col: Coloring) -> PathEmbedding:
    """NHAP of an equitably colored double-chain whose chains each hold at
    least a fifth of the points.  Linear time; the result is not certified
    (see :func:`validate_path` and :func:`certify_path`)."""
    sizes = (len(dc.c1), len(dc.c2)) if isinstance(dc, DoubleChain) else tuple(dc)
    if (len(col.c1), len(col.c2)) != sizes:
        raise PreconditionError("coloring does not match the double-chain sizes")
    if not is_equitable(col):
        raise PreconditionError("coloring is not equitable")
    if not balanced_condition(*sizes):
        raise PreconditionError("a chain holds fewer than a fifth of the points")
    if sizes[0] + sizes[1] == 1:
        return PathEmbedding(((0, 0) if sizes[0] else (1, 0),))
    w, _ = _prepare(sizes, col)
    path = _solve(w)
    order = tuple(w.origin[p] for p in path)
    if len(order) != sizes[0] + sizes[1]:
        raise InvariantError(f"path has {len(order)} points, expected {sizes[0] + sizes[1]}")
    return PathEmbedding(order)  # type: ignore[arg-type]


def _order_of(w: _Work, path: list[int], n: int) -> PathEmbedding:
    order = tuple(w.origin[p] for p in path)
    if len(order) != n:
        raise InvariantError(f"path has {len(order)} points, expected {n}")
    return PathEmbedding(order)  # type: ignore[arg-type]


def _even_case_work(dc: DoubleChain, col: Coloring) -> tuple[_Work, int, int, int]:
    sizes = (len(dc.c1), len(dc.c2))
    if (len(col.c1), len(col.c2)) != sizes:
        raise PreconditionError("coloring does not match the double-chain sizes")
    if sum(sizes) % 2 or col.blacks != col.whites:
        raise PreconditionError("needs an even number of points with equal color classes")
    w, _ = _prepare(sizes, col)
    return w, w.surplus(1), len(w.runs(0)), len(w.runs(1))


def embed_delta_large(dc: DoubleChain, col: Coloring) -> PathEmbedding:
    """Even case with a surplus of at least max(r1, r2): cut the runs into
    delta bodies per chain and alternate between the chains."""
    w, delta, r1, r2 = _even_case_work(dc, col)
    if delta < max(r1, r2):
        raise PreconditionError(f"delta={delta} is below max(r1, r2)={max(r1, r2)}")
    return _order_of(w, _finish(w, _route_delta_large(w, delta), []), dc.n)


def embed_equal_runs(dc: DoubleChain, col: Coloring) -> PathEmbedding:
    """Even case with equally many runs on both chains."""
    w, _, r1, r2 = _even_case_work(dc, col)
    if r1 != r2:
        raise PreconditionError(f"run counts differ ({r1} vs {r2})")
    return _order_of(w, _finish(w, _even_runs_case(w), []), dc.n)


def embed_no_singletons(dc: DoubleChain, col: Coloring) -> PathEmbedding:
    """Even case where the chain with more runs has no singleton: cover the
    other chain by r1 - 1 hedgehogs and thread one body per run between them."""
    w, delta, r1, r2 = _even_case_work(dc, col)
    mj, seq = w.major, w.seq[0]
    if any(mj[seq[i - 1]] == mj[seq[i + 1]] != mj[seq[i]] for i in range(1, len(seq) - 1)):
        raise PreconditionError("C1 has a singleton")
    k = r1 - 1
    if k < 1 or len(w.seq[1]) < k or r2 > k or delta > k:
        raise PreconditionError(f"C2 cannot be covered by {k} hedgehogs")
    lower = cover_with_k_hedgehogs(w.flags(1), k, chain=1)
    w.insert_virtual(0, left_of_first_major=True)
    return _order_of(w, _finish(w, _route_no_singletons(w, lower), []), dc.n)


# ---------------------------------------------------------------------------
# contraction as a standalone operation


def contract_singletons(col: Coloring, limit: int | None = None) -> tuple[Coloring, ContractionRecord]:
    """Contract singletons on C1 (after normalization) until ``limit`` is
    reached or none remain.  ``limit`` defaults to the number the dispatcher
    would use: r1 - max(r2, delta), or zero when a direct case applies."""
    major = choose_major(col.c1, col.c2)
    f1 = [c == major for c in col.c1]
    f2 = [c != major for c in col.c2]
    r1, r2 = len(runs_of(f1)), len(runs_of(f2))
    delta = 2 * sum(f2) - len(f2)
    if limit is None:
        limit = 0 if (r1 == r2 or delta >= r1) else max(0, r1 - max(r2, delta))
    seq = list(col.c1)
    steps: list[tuple[int, int, str]] = []
    stack: list[str] = []
    i = 0
    while i < len(seq):
        stack.append(seq[i])
        i += 1
        while len(steps) < limit and len(stack) >= 3 and stack[-1] == stack[-3] != stack[-2]:
            pos = len(stack) - 2
            stack.pop()
            stack.pop()
            steps.append((0, pos, stack[-1]))
        if len(steps) >= limit:
            stack.extend(seq[i:])
            break
    reduced = Coloring("".join(stack), col.c2)
    r_new = len(runs_of([c == major for c in reduced.c1]))
    if r_new != r1 - len(steps):
        raise InvariantError("each contraction must remove exactly one run")
    return reduced, ContractionRecord(tuple(steps))


def replay_contractions(col: Coloring, rec: ContractionRecord) -> Coloring:
    """Undo the contractions of ``rec`` on a reduced coloring."""
    c1 = list(col.c1)
    for _, pos, ncol in reversed(rec.steps):
        other = "W" if ncol == "B" else "B"
        if c1[pos - 1] != ncol:
            raise ValueError("record does not match the coloring")
        c1[pos - 1 : pos] = [ncol, other, ncol]
    return Coloring("".join(c1), col.c2)


def expand_path(path: PathEmbedding, rec: ContractionRecord) -> PathEmbedding:
    """Expand an NHAP of a contracted coloring to one of the original.

    Each merged point becomes the triple (neighbor, singleton, neighbor),
    oriented so that the two edges joining it to the rest of the path do not
    cross.  Quadratic in the worst case; the linear driver uses its own
    linked-list expansion.
    """
    order = list(path.order)
    for _, pos, _ in reversed(rec.steps):
        m = pos - 1
        shifted = [(c, p + 2 if c == 0 and p > m else p) for c, p in order]
        i = shifted.index((0, m))
        a, s, b = (0, m), (0, m + 1), (0, m + 2)
        u = shifted[i - 1] if i > 0 else None
        v = shifted[i + 1] if i + 1 < len(shifted) else None
        triple = [a, s, b]
        if u is not None and v is not None and _cross_keyed(u, a, b, v):
            triple.reverse()
            if _cross_keyed(u, b, a, v):
                raise InvariantError("contraction cannot be expanded")
        order = shifted[:i] + triple + shifted[i + 1 :]
    return PathEmbedding(tuple(order))


# ---------------------------------------------------------------------------
# validation


def validate_path(dc: DoubleChain, col: Coloring, path: PathEmbedding | Sequence[tuple[int, int]]) -> ValidationReport:
    """Hamiltonian, alternating and geometrically non-crossing.  Quadratic."""
    order = path.order if isinstance(path, PathEmbedding) else tuple(path)
    rep = _check_perm_and_colors(dc, col, order)
    if not rep.ok:
        return rep
    pts = [dc.point(c, p) for c, p in order]
    if not edges_noncrossing(list(zip(pts, pts[1:]))):
        return ValidationReport(False, "edges cross")
    return ValidationReport(True)


def _check_perm_and_colors(dc: DoubleChain, col: Coloring, order) -> ValidationReport:
    expected = {(0, i) for i in range(len(dc.c1))} | {(1, j) for j in range(len(dc.c2))}
    if len(order) != len(expected) or set(order) != expected:
        return ValidationReport(False, "not a Hamiltonian path")
    for (c, p), (d, q) in zip(order, order[1:]):
        if col.color(c, p) == col.color(d, q):
            return ValidationReport(False, f"not alternating at ({c},{p})-({d},{q})")
    return ValidationReport(True)


def certify_path(dc: DoubleChain, col: Coloring, path: PathEmbedding) -> ValidationReport:
    """Exact certificate for double-chains in O(n log n).

    Relies on the double-chain crossing structure (chords of one chain cross
    iff they interleave, edges across the chains cross iff their orders
    disagree, and the two kinds never cross), so it is only as sound as the
    double-chain property of ``dc``.
    """
    from dchain.hedgehog import chords_laminar

    order = path.order
    rep = _check_perm_and_colors(dc, col, order)
    if not rep.ok:
        return rep
    chords: list[list[tuple[int, int]]] = [[], []]
    across: list[tuple[int, int]] = []
    for (c, p), (d, q) in zip(order, order[1:]):
        if c == d:
            chords[c].append((min(p, q), max(p, q)))
        else:
            across.append((p, q) if c == 0 else (q, p))
    for c in (0, 1):
        if not chords_laminar(chords[c]):
            return ValidationReport(False, f"chords on c{c + 1} cross")
    across.sort()
    prev_max, cur_p, cur_max = -1, None, -1
    for p, q in across:
        if p != cur_p:
            prev_max = max(prev_max, cur_max)
            cur_p, cur_max = p, -1
        if q < prev_max:
            return ValidationReport(False, "edges between the chains cross")
        cur_max = max(cur_max, q)
    return ValidationReport(True)
