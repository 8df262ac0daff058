"""Caterpillars and star forests on balanced double-chains."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from dchain.chains import Coloring, DoubleChain, ValidationReport, choose_major, is_compatible
from dchain.geometry import Segment, convex_hull, point_in_open_segment, segments_conflict
from dchain.nhap import InvariantError, PreconditionError


@dataclass(frozen=True)
class ColoredGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    colors: str

    def __post_init__(self) -> None:
        if len(self.colors) != self.n:
            raise ValueError(f"{len(self.colors)} colors for {self.n} vertices")
        if set(self.colors) - {"B", "W"}:
            raise ValueError("colors must be B or W")
        norm = tuple(sorted((min(u, v), max(u, v)) for u, v in self.edges))
        for u, v in norm:
            if u == v or not 0 <= u < self.n or not 0 <= v < self.n:
                raise ValueError(f"bad edge ({u}, {v})")
        if len(set(norm)) != len(norm):
            raise ValueError("repeated edge")
        object.__setattr__(self, "edges", norm)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    @property
    def is_proper(self) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in self.edges)

    @property
    def is_equitable(self) -> bool:
        return abs(self.colors.count("B") - self.colors.count("W")) <= 1

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "ColoredGraph":
        return ColoredGraph(self.n, self.edges + tuple(extra), self.colors)


@dataclass(frozen=True)
class Caterpillar:
    graph: ColoredGraph
    central_path: tuple[int, ...]


@dataclass(frozen=True)
class StarCensus:
    k: dict[int, int] = field(default_factory=dict)  # size -> stars with black center
    h: dict[int, int] = field(default_factory=dict)  # size -> stars with white center
    n2: int = 0
    n1: int = 0

    def vertex_total(self) -> int:
        return self.n1 + 2 * self.n2 + sum(i * (self.k.get(i, 0) + self.h.get(i, 0)) for i in set(self.k) | set(self.h))


@dataclass(frozen=True)
class Embedding:
    """Vertex -> (chain, position) on a double-chain."""

    map: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ForestCheck:
    ok: bool
    cycle: tuple[int, ...] | None = None
    subdivided_star: tuple[int, ...] | None = None  # root, (middle, leaf) x 3

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# recognition


def find_subdivided_star(adj: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Root with three neighbors that each have a further neighbor, all seven
    vertices distinct; assumes no cycles through the root's neighborhood
    matter (true in forests, where this is exact)."""
    for root, nbrs in enumerate(adj):
        if len(nbrs) < 3:
            continue
        arms: list[tuple[int, int]] = []
        used = {root}
        for a in nbrs:
            if a in used:
                continue
            leaf = next((x for x in adj[a] if x not in used and x not in nbrs), None)
            if leaf is None:
                continue
            arms.append((a, leaf))
            used.update((a, leaf))
            if len(arms) == 3:
                return (root,) + tuple(x for arm in arms for x in arm)
    return None


def is_forest_of_caterpillars(g: ColoredGraph) -> ForestCheck:
    """True iff ``g`` has no cycle and no subdivided 3-star; otherwise a witness."""
    cycles = nx.cycle_basis(g.to_networkx())
    if cycles:
        return ForestCheck(False, cycle=tuple(min(cycles, key=len)))
    star = find_subdivided_star(g.adjacency())
    if star is not None:
        return ForestCheck(False, subdivided_star=star)
    return ForestCheck(True)


def central_path_of(g: ColoredGraph) -> tuple[int, ...]:
    """Non-leaf vertices of a caterpillar, in path order.

    A single edge has no non-leaf vertex; its first endpoint is used, and a
    single vertex is its own central path.
    """
    if g.n == 1:
        return (0,)
    if len(g.edges) != g.n - 1 or not nx.is_connected(g.to_networkx()):
        raise PreconditionError("not a tree")
    adj = g.adjacency()
    inner = [v for v in range(g.n) if len(adj[v]) >= 2]
    if not inner:
        return (g.edges[0][0],)
    inner_set = set(inner)
    deg = {v: sum(1 for x in adj[v] if x in inner_set) for v in inner}
    if any(d > 2 for d in deg.values()):
        raise PreconditionError("not a caterpillar")
    start = next(v for v in inner if deg[v] <= 1)
    order, prev, cur = [start], -1, start
    while True:
        nxt = next((x for x in adj[cur] if x in inner_set and x != prev), None)
        if nxt is None:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def as_caterpillar(g: ColoredGraph) -> Caterpillar:
    return Caterpillar(g, central_path_of(g))


# ---------------------------------------------------------------------------
# caterpillar embedding


def _match_on_chain(minors: list[int], demands: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Non-crossing matching of free minor positions to (position, vertex)
    demand tokens along one chain; returns (minor position, vertex) pairs."""
    events = sorted([(p, 0, -1) for p in minors] + [(p, 1, v) for p, v in demands])
    stack: list[tuple[int, int, int]] = []
    out: list[tuple[int, int]] = []
    for ev in events:
        if stack and stack[-1][1] != ev[1]:
            top = stack.pop()
            f, tok = (ev, top) if ev[1] == 0 else (top, ev)
            out.append((f[0], tok[2]))
        else:
            stack.append(ev)
    if stack:
        raise InvariantError("minor points and removed leaves do not match up")
    return out


def embed_caterpillar(dc: DoubleChain, cat: Caterpillar | ColoredGraph, col: Coloring) -> Embedding:
    """Embed a caterpillar whose central path has at most n/2 vertices."""
    if isinstance(cat, ColoredGraph):
        cat = as_caterpillar(cat)
    g = cat.graph
    if not col.fits(dc):
        raise PreconditionError("coloring does not match the double-chain")
    if not dc.balanced:
        raise PreconditionError("double-chain is not balanced")
    if g.n != dc.n:
        raise PreconditionError(f"{g.n} vertices for {dc.n} points")
    if not g.is_proper:
        raise PreconditionError("graph coloring is not proper")
    if not g.is_equitable:
        raise PreconditionError("graph coloring is not equitable")
    if not is_compatible(col, g.colors):
        raise PreconditionError("point coloring is not compatible with the graph")
    spine = cat.central_path
    if len(spine) > max(1, g.n // 2):
        raise PreconditionError(f"central path has {len(spine)} > n/2 vertices")

    black = choose_major(col.c1, col.c2)  # major on C1
    chain_of = {black: 0}
    chain_of["W" if black == "B" else "B"] = 1
    adj = g.adjacency()
    spine_set = set(spine)
    leaves: dict[int, list[int]] = {v: [x for x in adj[v] if x not in spine_set] for v in spine}

    # remove minor-many leaves of each color, from the far end of the spine
    quota = {black: col.c2.count(black), ("W" if black == "B" else "B"): col.c1.count("W" if black == "B" else "B")}
    removed: dict[int, list[int]] = defaultdict(list)
    for v in reversed(spine):
        for x in reversed(leaves[v]):
            c = g.colors[x]
            if quota[c] > 0:
                quota[c] -= 1
                removed[v].append(x)
    if any(quota.values()):
        raise InvariantError("too few leaves for the minor points")

    majors = [[p for p, c in enumerate(col.chain(ch)) if chain_of[c] == ch] for ch in (0, 1)]
    nxt = [0, 0]
    place: dict[int, tuple[int, int]] = {}

    def put(v: int) -> None:
        ch = chain_of[g.colors[v]]
        place[v] = (ch, majors[ch][nxt[ch]])
        nxt[ch] += 1

    for v in spine:
        put(v)
        gone = set(removed[v])
        for x in leaves[v]:
            if x not in gone:
                put(x)

    for ch in (0, 1):
        minors = [p for p, c in enumerate(col.chain(ch)) if chain_of[c] != ch]
        demands = [(place[v][1], x) for v in spine if place[v][0] == ch for x in removed[v]]
        for pos, x in _match_on_chain(minors, demands):
            place[x] = (ch, pos)

    if len(place) != g.n:
        raise InvariantError("not every vertex was placed")
    return Embedding(tuple(place[v] for v in range(g.n)))


def validate_embedding(dc: DoubleChain, col: Coloring, g: ColoredGraph, emb: Embedding) -> ValidationReport:
    """Injective, color-preserving and non-crossing; quadratic in |E|."""
    if len(emb.map) != g.n:
        return ValidationReport(False, f"map has {len(emb.map)} entries for {g.n} vertices")
    for v, (c, p) in enumerate(emb.map):
        if c not in (0, 1) or not 0 <= p < len(dc.chain(c)):
            return ValidationReport(False, f"vertex {v} maps outside the point set")
        if col.color(c, p) != g.colors[v]:
            return ValidationReport(False, f"vertex {v} lands on a point of the other color")
    if len(set(emb.map)) != g.n:
        return ValidationReport(False, "two vertices share a point")
    segs = [Segment(dc.point(*emb.map[u]), dc.point(*emb.map[v])) for u, v in g.edges]
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if segments_conflict(segs[i], segs[j]):
                return ValidationReport(False, f"edges {g.edges[i]} and {g.edges[j]} conflict")
    # an edge may not run through a vertex that is not its endpoint
    used = [dc.point(*r) for r in emb.map]
    for (u, v), s in zip(g.edges, segs):
        for x, q in enumerate(used):
            if x not in (u, v) and point_in_open_segment(q, s):
                return ValidationReport(False, f"edge {(u, v)} passes through vertex {x}")
    return ValidationReport(True)


# ---------------------------------------------------------------------------
# star forests


def star_components(g: ColoredGraph) -> list[tuple[int | None, list[int]]]:
    """(center, vertices) per component; center is None for components on at
    most two vertices."""
    out = []
    adj = g.adjacency()
    for comp in nx.connected_components(g.to_networkx()):
        vs = sorted(comp)
        m = sum(len(adj[v]) for v in vs) // 2
        if m != len(vs) - 1:
            raise PreconditionError("not a forest")
        if len(vs) <= 2:
            out.append((None, vs))
            continue
        centers = [v for v in vs if len(adj[v]) == len(vs) - 1]
        if len(centers) != 1:
            raise PreconditionError("component is not a star")
        out.append((centers[0], vs))
    out.sort(key=lambda cv: cv[1][0])
    return out


def star_census(g: ColoredGraph) -> StarCensus:
    k: Counter[int] = Counter()
    h: Counter[int] = Counter()
    n1 = n2 = 0
    for center, vs in star_components(g):
        if center is None:
            if len(vs) == 1:
                n1 += 1
            else:
                n2 += 1
        elif g.colors[center] == "B":
            k[len(vs)] += 1
        else:
            h[len(vs)] += 1
    return StarCensus(dict(k), dict(h), n2, n1)


def stars_to_caterpillar(g: ColoredGraph, census: StarCensus | None = None) -> Caterpillar:
    """Add edges to a properly, equitably colored star forest to get a
    caterpillar on the same vertices with a central path of at most n/2."""
    if not g.is_proper or not g.is_equitable:
        raise PreconditionError("star forest must be properly and equitably colored")
    comps = star_components(g)
    census = census or star_census(g)
    if census.vertex_total() != g.n:
        raise InvariantError("census does not account for every vertex")
    if g.n == 1:
        return Caterpillar(g, (0,))

    # play the proof with "black" = the center color of at least half the big stars
    black = "W" if sum(census.h.values()) > sum(census.k.values()) else "B"
    big_b = [(c, vs) for c, vs in comps if c is not None and g.colors[c] == black]
    big_w = [(c, vs) for c, vs in comps if c is not None and g.colors[c] != black]
    pairs = [vs for c, vs in comps if c is None and len(vs) == 2]
    singles = [vs[0] for c, vs in comps if c is None and len(vs) == 1]
    new_edges: list[tuple[int, int]] = []
    if not g.edges:
        u = next(v for v in singles if g.colors[v] == black)
        w = next(v for v in singles if g.colors[v] != black)
        new_edges.append((u, w))
        pairs.append([u, w])
        singles = [v for v in singles if v not in (u, w)]

    path: list[int] = []
    need_black = True
    ib = iw = ip = 0
    while True:
        if need_black and ib < len(big_b):
            v = big_b[ib][0]
            ib += 1
        elif not need_black and iw < len(big_w):
            v = big_w[iw][0]
            iw += 1
        elif ip < len(pairs):
            v = next(x for x in pairs[ip] if (g.colors[x] == black) == need_black)
            ip += 1
        else:
            break
        if path:
            new_edges.append((path[-1], v))
        path.append(v)
        need_black = not need_black
    if iw < len(big_w):
        raise InvariantError("white-centered stars left over")
    for c, vs in big_b[ib:]:
        leaf = next(x for x in vs if x != c)
        new_edges.append((path[-1], leaf))
        path.extend((leaf, c))

    adj = g.with_edges(new_edges).adjacency()
    if len(path) == 1:
        v = path[0]
        u = adj[v][0]
        for x in singles:
            new_edges.append((v, x) if g.colors[x] != g.colors[v] else (u, x))
    else:
        first = {g.colors[v]: v for v in reversed(path)}
        for x in singles:
            new_edges.append((first["W" if g.colors[x] == "B" else "B"], x))

    cat = as_caterpillar(g.with_edges(new_edges))
    if not cat.graph.is_proper:
        raise InvariantError("added edges are not properly colored")
    if len(cat.central_path) > max(1, g.n // 2):
        raise InvariantError(f"central path {len(cat.central_path)} exceeds n/2")
    return cat


def embed_star_forest(dc: DoubleChain, g: ColoredGraph, col: Coloring) -> Embedding:
    """Embed a star forest by completing it to a caterpillar first; the
    returned map is valid for the forest's own edges."""
    return embed_caterpillar(dc, stars_to_caterpillar(g), col)


# ---------------------------------------------------------------------------
# quadrangulations


def blocking_coloring_for_quadrangulation(points: Sequence[Sequence[int]], g: ColoredGraph) -> str:
    """Point coloring putting three hull points in the larger color class.

    No face of a quadrangulation has three vertices of one color, while the
    hull points of any drawing share the outer face.
    """
    if g.n < 5 or len(points) != g.n:
        raise PreconditionError("need a graph on at least five vertices and as many points")
    if not g.is_proper:
        raise PreconditionError("graph coloring is not proper")
    hull = convex_hull(points)
    if len(hull) < 3:
        raise PreconditionError("point set has fewer than three hull points")
    big = "B" if g.colors.count("B") >= g.colors.count("W") else "W"
    small = "W" if big == "B" else "B"
    out = [""] * len(points)
    for i in hull[:3]:
        out[i] = big
    left = g.colors.count(big) - 3
    for i in range(len(points)):
        if not out[i]:
            out[i] = big if left > 0 else small
            left -= out[i] == big
    return "".join(out)


def cube_graph() -> ColoredGraph:
    """The 3-cube, properly colored by bit parity."""
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return ColoredGraph(8, tuple(edges), "".join("B" if bin(u).count("1") % 2 == 0 else "W" for u in range(8)))


def subdivided_star(root_color: str = "W") -> ColoredGraph:
    """K+_{1,3}: vertex 0 is the root, 1..3 the middles, 4..6 the leaves."""
    other = "B" if root_color == "W" else "W"
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]
    return ColoredGraph(7, tuple(edges), root_color + other * 3 + root_color * 3)
