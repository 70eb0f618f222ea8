"""Named graph families and a structural recogniser for them."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BadParameter
from .graph import LaplacianMode, WeightedGraph, bfs_distances, build_graph


class FamilyKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    STAR3EXT = "star3ext"
    SPIDER = "spider"


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: FamilyKind
    params: tuple[int, ...]

    def __post_init__(self):
        k, p = self.kind, self.params
        ok = {
            FamilyKind.PATH: len(p) == 1 and p[0] >= 1,
            FamilyKind.CYCLE: len(p) == 1 and p[0] >= 3,
            FamilyKind.STAR: len(p) == 1 and p[0] >= 3,
            FamilyKind.STAR3EXT: len(p) == 1 and 1 <= p[0] <= 3,
            FamilyKind.SPIDER: len(p) == 3 and min(p) >= 1,
        }[k]
        if not ok:
            raise BadParameter(f"invalid parameters {p} for {k.value}")

    def __str__(self):
        k, p = self.kind, self.params
        if k is FamilyKind.PATH:
            return f"P{p[0]}"
        if k is FamilyKind.CYCLE:
            return f"C{p[0]}"
        if k is FamilyKind.STAR:
            return f"Star{p[0]}"
        if k is FamilyKind.STAR3EXT:
            return f"Star3^{p[0]}"
        return "Spider({},{},{})".format(*p)

    @property
    def sort_key(self):
        return (self.n_vertices, self.kind.value, self.params)

    @property
    def n_vertices(self) -> int:
        k, p = self.kind, self.params
        if k is FamilyKind.PATH:
            return p[0] + 1
        if k is FamilyKind.CYCLE:
            return p[0]
        if k is FamilyKind.STAR:
            return p[0] + 1
        if k is FamilyKind.STAR3EXT:
            return 4 + p[0]
        return 1 + sum(p)

    def build(self, mode=LaplacianMode.NORMALIZED) -> WeightedGraph:
        k, p = self.kind, self.params
        if k is FamilyKind.PATH:
            return make_path(p[0], mode)
        if k is FamilyKind.CYCLE:
            return make_cycle(p[0], mode)
        if k is FamilyKind.STAR:
            return make_star(p[0], mode)
        if k is FamilyKind.STAR3EXT:
            return make_star3_ext(p[0], mode)
        return make_spider(*p, mode=mode)


def _check_int(value, low, name):
    if not isinstance(value, int) or isinstance(value, bool) or value < low:
        raise BadParameter(f"{name} must be an integer >= {low}, got {value!r}")


def make_path(k: int, mode=LaplacianMode.NORMALIZED) -> WeightedGraph:
    """Path with ``k`` edges on ``k + 1`` vertices."""
    _check_int(k, 1, "k")
    return build_graph([(i, i + 1) for i in range(k)], mode=mode)


def make_cycle(n: int, mode=LaplacianMode.NORMALIZED) -> WeightedGraph:
    _check_int(n, 3, "n")
    return build_graph([(i, (i + 1) % n) for i in range(n)], mode=mode)


def make_star(n: int, mode=LaplacianMode.NORMALIZED) -> WeightedGraph:
    """Centre 0 joined to ``n`` leaves."""
    _check_int(n, 3, "n")
    return build_graph([(0, i) for i in range(1, n + 1)], mode=mode)


def make_spider(l1: int, l2: int, l3: int, mode=LaplacianMode.NORMALIZED) -> WeightedGraph:
    """Degree-3 centre 0 with three legs of the given lengths."""
    for name, leg in (("l1", l1), ("l2", l2), ("l3", l3)):
        _check_int(leg, 1, name)
    edges = []
    nxt = 1
    for leg in (l1, l2, l3):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(edges, mode=mode)


def make_star3_ext(i: int, mode=LaplacianMode.NORMALIZED) -> WeightedGraph:
    """3-star with ``i`` of its legs extended by one edge."""
    if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= 3:
        raise BadParameter(f"i must be 1, 2 or 3, got {i!r}")
    legs = [2] * i + [1] * (3 - i)
    return make_spider(*legs, mode=mode)


def make_petersen(mode=LaplacianMode.NORMALIZED) -> WeightedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(outer + spokes + inner, mode=mode)


def _leg_length(g: WeightedGraph, center: int, start: int) -> int | None:
    """Length of the bare path leaving ``center`` through ``start``, or None if it branches."""
    prev, cur, length = center, start, 1
    while True:
        nbrs = g.adj[cur]
        if len(nbrs) == 1:
            return length
        if len(nbrs) != 2:
            return None
        nxt = nbrs[0] if nbrs[1] == prev else nbrs[1]
        prev, cur, length = cur, nxt, length + 1


def is_family_member(g: WeightedGraph) -> FamilyDescriptor | None:
    """Identify ``g`` as a path, cycle, star, extended 3-star or 3-legged spider."""
    n = g.n
    m = len(g.edges)
    degrees = [len(a) for a in g.adj]
    if m == n and all(d == 2 for d in degrees) and n >= 3:
        return FamilyDescriptor(FamilyKind.CYCLE, (n,))
    if m != n - 1:
        return None
    if max(degrees) <= 2:
        return FamilyDescriptor(FamilyKind.PATH, (n - 1,))
    hubs = [x for x in g.vertices if degrees[x] >= 3]
    if len(hubs) != 1:
        return None
    center = hubs[0]
    legs = sorted((_leg_length(g, center, y) for y in g.adj[center]), reverse=True)
    if all(leg == 1 for leg in legs):
        return FamilyDescriptor(FamilyKind.STAR, (len(legs),))
    if len(legs) != 3:
        return None
    if max(legs) == 2:
        return FamilyDescriptor(FamilyKind.STAR3EXT, (legs.count(2),))
    return FamilyDescriptor(FamilyKind.SPIDER, tuple(legs))


_SHORTHAND = {
    "path": (make_path, 1),
    "cycle": (make_cycle, 1),
    "star": (make_star, 1),
    "star3ext": (make_star3_ext, 1),
    "spider": (make_spider, 3),
    "petersen": (make_petersen, 0),
}


def from_shorthand(text: str, mode=LaplacianMode.NORMALIZED) -> WeightedGraph:
    """Build a family graph from ``family:<name>[:<int>[,<int>...]]``."""
    parts = text.split(":")
    if len(parts) not in (2, 3) or parts[0] != "family" or parts[1] not in _SHORTHAND:
        raise BadParameter(f"bad family shorthand {text!r}; known: {', '.join(sorted(_SHORTHAND))}")
    maker, arity = _SHORTHAND[parts[1]]
    args: list[int] = []
    if len(parts) == 3 and parts[2]:
        try:
            args = [int(a) for a in parts[2].split(",")]
        except ValueError:
            raise BadParameter(f"bad family parameters in {text!r}") from None
    if len(args) != arity:
        raise BadParameter(f"family {parts[1]!r} takes {arity} parameter(s)")
    return maker(*args, mode=mode)


def line_surrogate_vertices(g: WeightedGraph) -> list[int]:
    """Vertices of a path at distance at least 3 from both ends.

    Their radius-2 balls look like the bi-infinite line's, so CD at these
    vertices stands in for CD on the infinite line.
    """
    ends = [x for x in g.vertices if len(g.adj[x]) == 1]
    if len(ends) != 2 or max(len(a) for a in g.adj) > 2:
        raise BadParameter("expected a path graph")
    d0, d1 = bfs_distances(g, ends[0]), bfs_distances(g, ends[1])
    return [x for x in g.vertices if d0[x] >= 3 and d1[x] >= 3]


def half_line_surrogate_vertices(g: WeightedGraph) -> list[int]:
    """Vertices of a path at distance at least 3 from its last end (the half-line's stand-in)."""
    ends = [x for x in g.vertices if len(g.adj[x]) == 1]
    if len(ends) != 2 or max(len(a) for a in g.adj) > 2:
        raise BadParameter("expected a path graph")
    far = bfs_distances(g, max(ends))
    return [x for x in g.vertices if far[x] >= 3]
