"""Double-chains: construction, validation, colorings and run statistics."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence, Union

from dchain.geometry import COORD_LIMIT, Point, orient_raw

ChainKind = Literal["convex", "concave"]
CHAIN_IDS = ("c1", "c2")
PERIOD_16 = "BBWWWWBBBBBBWWWW"

# cubic validation is only run automatically below this many points
AUTO_VALIDATE_LIMIT = 200


class InfeasibleSizeError(ValueError):
    pass


@dataclass(frozen=True)
class Chain:
    points: tuple[Point, ...]
    kind: ChainKind

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]


@dataclass(frozen=True)
class DoubleChain:
    c1: Chain
    c2: Chain

    @classmethod
    def from_points(cls, c1: Sequence[Sequence[int]], c2: Sequence[Sequence[int]]) -> "DoubleChain":
        return cls(
            Chain(tuple(Point(int(x), int(y)) for x, y in c1), "convex"),
            Chain(tuple(Point(int(x), int(y)) for x, y in c2), "concave"),
        )

    def chain(self, cid: int) -> Chain:
        return self.c1 if cid == 0 else self.c2

    def point(self, cid: int, pos: int) -> Point:
        return self.chain(cid).points[pos]

    @property
    def n(self) -> int:
        return len(self.c1) + len(self.c2)

    @property
    def balanced(self) -> bool:
        return abs(len(self.c1) - len(self.c2)) <= 1


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _separation(n1: int, n2: int) -> int:
    # chord values of y=x^2 over |x| <= R stay within 2R^2 of the curve
    r = max(n1, n2)
    return 2 * r * r + 1


def _build(n1: int, n2: int, sep: int) -> DoubleChain:
    c1 = [(2 * i - (n1 - 1), (2 * i - (n1 - 1)) ** 2) for i in range(n1)]
    c2 = [(2 * j - (n2 - 1), -sep - (2 * j - (n2 - 1)) ** 2) for j in range(n2)]
    return DoubleChain.from_points(c1, c2)


def generate_double_chain(n1: int, n2: int) -> DoubleChain:
    """Deterministic double-chain with ``n1`` convex and ``n2`` concave points.

    The upper chain lies on y = x^2, the lower one on y = -H - x^2.  H starts
    at a sufficient closed-form bound; small outputs are certified and H is
    doubled on failure.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("both chains need at least one point")
    sep = _separation(n1, n2)
    r = max(n1, n2)
    while True:
        if sep + r * r > COORD_LIMIT:
            raise InfeasibleSizeError(f"coordinates overflow for sizes ({n1}, {n2})")
        dc = _build(n1, n2, sep)
        if n1 + n2 > AUTO_VALIDATE_LIMIT or validate_double_chain(dc):
            return dc
        sep *= 2


def validate_double_chain(dc: DoubleChain) -> ValidationReport:
    """Exact check of chain shape and mutual visibility; cubic time."""
    for name, chain, turn in (("c1", dc.c1, 1), ("c2", dc.c2, -1)):
        pts = chain.points
        for i in range(len(pts) - 1):
            if pts[i].x >= pts[i + 1].x:
                return ValidationReport(False, f"{name}: x not increasing at {i}")
        for i in range(len(pts) - 2):
            o = orient_raw(pts[i], pts[i + 1], pts[i + 2])
            if (o > 0) - (o < 0) != turn:
                return ValidationReport(False, f"{name}: convexity violated at {i}")
    a, b = dc.c1.points, dc.c2.points
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            for k, q in enumerate(b):
                if orient_raw(a[i], a[j], q) >= 0:
                    return ValidationReport(False, f"visibility: c2[{k}] not below line c1[{i}]c1[{j}]")
    for i in range(len(b)):
        for j in range(i + 1, len(b)):
            for k, p in enumerate(a):
                if orient_raw(b[i], b[j], p) <= 0:
                    return ValidationReport(False, f"visibility: c1[{k}] not above line c2[{i}]c2[{j}]")
    return ValidationReport(True)


@dataclass(frozen=True)
class Coloring:
    """Point colors as two strings over {B, W}, one per chain, left to right."""

    c1: str
    c2: str

    def __post_init__(self) -> None:
        bad = set(self.c1 + self.c2) - {"B", "W"}
        if bad:
            raise ValueError(f"invalid color symbols {sorted(bad)}")

    def chain(self, cid: int) -> str:
        return self.c1 if cid == 0 else self.c2

    def color(self, cid: int, pos: int) -> str:
        return self.chain(cid)[pos]

    def __len__(self) -> int:
        return len(self.c1) + len(self.c2)

    @property
    def blacks(self) -> int:
        return self.c1.count("B") + self.c2.count("B")

    @property
    def whites(self) -> int:
        return len(self) - self.blacks

    def swapped(self) -> "Coloring":
        t = str.maketrans("BW", "WB")
        return Coloring(self.c1.translate(t), self.c2.translate(t))

    def fits(self, dc: DoubleChain) -> bool:
        return len(self.c1) == len(dc.c1) and len(self.c2) == len(dc.c2)


def flip_colors(s: str) -> str:
    return s.translate(str.maketrans("BW", "WB"))


def periodic_coloring_16(n1: int) -> str:
    """Colors of the first ``n1`` points of the period BB WWWW BBBBBB WWWW."""
    if n1 < 1:
        raise ValueError("n1 must be positive")
    reps, rest = divmod(n1, 16)
    return PERIOD_16 * reps + PERIOD_16[:rest]


def count_runs(colors: str, major: str) -> int:
    """Number of maximal intervals of ``major``-colored points."""
    runs, prev = 0, False
    for c in colors:
        cur = c == major
        if cur and not prev:
            runs += 1
        prev = cur
    return runs


@dataclass(frozen=True)
class ChainStats:
    """Counts after normalization: b* is the major color of C1, w* of C2.

    ``major_c1`` records which real color plays black; ``delta`` is the
    surplus of majors on C2, which equals b1 - w1 whenever n is even and the
    coloring equitable.
    """

    b1: int
    w1: int
    b2: int
    w2: int
    r1: int
    r2: int
    delta: int
    major_c1: str = "B"

    @property
    def colors_swapped(self) -> bool:
        return self.major_c1 == "W"

    @property
    def surplus1(self) -> int:
        return self.b1 - self.w1

    @property
    def surplus2(self) -> int:
        return self.w2 - self.b2


def choose_major(c1: str, c2: str) -> str:
    """Color to treat as major on C1 so both chains have a nonnegative surplus.

    Black wins ties.  For colorings where no choice works (not equitable) the
    choice maximizing the smaller surplus is returned.
    """
    best, best_key = "B", None
    for major in ("B", "W"):
        minor = "W" if major == "B" else "B"
        s1 = c1.count(major) - c1.count(minor)
        s2 = c2.count(minor) - c2.count(major)
        key = min(s1, s2) >= 0, min(s1, s2)
        if best_key is None or key > best_key:
            best, best_key = major, key
    return best


def compute_stats(dc: DoubleChain | None, col: Coloring) -> ChainStats:
    if dc is not None and not col.fits(dc):
        raise ValueError("coloring does not match the double-chain sizes")
    major = choose_major(col.c1, col.c2)
    minor = "W" if major == "B" else "B"
    b1, w1 = col.c1.count(major), col.c1.count(minor)
    b2, w2 = col.c2.count(major), col.c2.count(minor)
    return ChainStats(
        b1=b1,
        w1=w1,
        b2=b2,
        w2=w2,
        r1=count_runs(col.c1, major),
        r2=count_runs(col.c2, minor),
        delta=w2 - b2,
        major_c1=major,
    )


def is_equitable(col: Union[Coloring, str]) -> bool:
    s = col.c1 + col.c2 if isinstance(col, Coloring) else col
    return abs(s.count("B") - s.count("W")) <= 1


def is_compatible(point_col: Union[Coloring, str], graph_col: str) -> bool:
    s = point_col.c1 + point_col.c2 if isinstance(point_col, Coloring) else point_col
    if len(s) != len(graph_col):
        raise ValueError(f"size mismatch: {len(s)} points vs {len(graph_col)} vertices")
    return s.count("B") == graph_col.count("B")


def balanced_condition(n1: int, n2: int) -> bool:
    """Each chain holds at least a fifth of all points."""
    n = n1 + n2
    return 5 * n1 >= n and 5 * n2 >= n
