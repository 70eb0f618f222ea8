"""Weighted graph model, distances, spheres, girth and the punctured ball.

Vertices are dense integers ``0..n-1``. Weights are stored either as
``fractions.Fraction`` (exact mode) or as ``float``; a graph never mixes the
two, so every downstream computation runs in a single arithmetic.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    GraphError,
    NonpositiveWeight,
    SelfLoop,
    SingleVertex,
    UnknownVertex,
)

INF = math.inf


class LaplacianMode(enum.Enum):
    NORMALIZED = "normalized"
    PHYSICAL = "physical"
    CUSTOM = "custom"

    @classmethod
    def parse(cls, value: "LaplacianMode | str") -> "LaplacianMode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise GraphError(f"unknown Laplacian mode {value!r}") from None


def _to_number(value, exact: bool):
    if isinstance(value, bool):
        raise GraphError(f"invalid weight {value!r}")
    if exact:
        if isinstance(value, (Rational, Decimal, float)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise GraphError(f"invalid weight {value!r}")
    return float(value)


def _is_exact_input(value) -> bool:
    return isinstance(value, (Rational, Decimal, str))


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Immutable simple connected graph with edge weights ``mu`` and vertex measure ``m``.

    Use :func:`build_graph` rather than the constructor; it validates the input
    and derives ``m`` from the Laplacian mode.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    mu: Mapping[tuple[int, int], object]
    m: tuple
    mode: LaplacianMode
    exact: bool
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, x: int) -> None:
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.n:
            raise UnknownVertex(f"unknown vertex {x!r}")

    def has_edge(self, x: int, y: int) -> bool:
        return (min(x, y), max(x, y)) in self.mu

    def weight(self, x: int, y: int):
        """Edge weight, extended by zero to non-adjacent pairs."""
        return self.mu.get((min(x, y), max(x, y)), self.zero)

    def neighbors(self, x: int) -> tuple[int, ...]:
        self.check_vertex(x)
        return self.adj[x]

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0.0

    def num(self, value):
        """Convert ``value`` into this graph's arithmetic."""
        if value == INF:
            return INF
        return _to_number(value, self.exact)

    @property
    def is_unweighted(self) -> bool:
        return all(w == 1 for w in self.mu.values())

    def edge_mu(self, x: int, y: int):
        return self.mu[(min(x, y), max(x, y))]

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and dict(self.mu) == dict(other.mu)
            and self.m == other.m
            and self.mode == other.mode
        )

    def __hash__(self):
        return hash((self.n, self.edges, self.m, self.mode))


def build_graph(
    edge_list: Iterable[Sequence],
    vertex_measures: Mapping[int, object] | None = None,
    mode: LaplacianMode | str = LaplacianMode.NORMALIZED,
    *,
    n: int | None = None,
    exact: bool | None = None,
) -> WeightedGraph:
    """Validate an edge list and return a :class:`WeightedGraph`.

    Parameters
    ----------
    edge_list : iterable of ``(u, v)`` or ``(u, v, mu)``
        ``mu`` defaults to 1.
    vertex_measures : mapping, optional
        Vertex measures; required (and only used) in custom mode.
    mode : LaplacianMode or str
        ``normalized`` sets ``m_x`` to the sum of incident weights,
        ``physical`` sets ``m`` to 1, ``custom`` takes ``vertex_measures``.
    n : int, optional
        Number of vertices. Defaults to one more than the largest id seen.
    exact : bool, optional
        Force rational (``True``) or float (``False``) arithmetic. By default
        the graph is exact unless a float weight is supplied.
    """
    mode = LaplacianMode.parse(mode)
    raw = []
    for item in edge_list:
        if len(item) == 2:
            u, v = item
            w = 1
        elif len(item) == 3:
            u, v, w = item
        else:
            raise GraphError(f"bad edge entry {item!r}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        raw.append((u, v, w))
    measures = dict(vertex_measures or {})

    values = [w for _, _, w in raw]
    if mode is LaplacianMode.CUSTOM:
        values += list(measures.values())
    if exact is None:
        exact = all(_is_exact_input(w) for w in values)

    ids = {u for u, v, _ in raw} | {v for u, v, _ in raw} | set(measures)
    for x in ids:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise GraphError(f"vertex ids must be non-negative integers, got {x!r}")
    if n is None:
        n = max(ids) + 1 if ids else 0
    if ids and max(ids) >= n:
        raise GraphError(f"vertex id {max(ids)} out of range for n={n}")
    if n == 1:
        raise SingleVertex("the single-vertex graph is excluded")
    if n == 0:
        raise GraphError("empty graph")

    mu: dict[tuple[int, int], object] = {}
    for u, v, w in raw:
        key = (min(u, v), max(u, v))
        if key in mu:
            raise DuplicateEdge(f"duplicate edge {key}")
        w = _to_number(w, exact)
        if not w > 0:
            raise NonpositiveWeight(f"edge {key} has non-positive weight {w}")
        mu[key] = w

    adj_sets: list[list[int]] = [[] for _ in range(n)]
    for u, v in mu:
        adj_sets[u].append(v)
        adj_sets[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in adj_sets)

    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise DisconnectedGraph(f"graph is disconnected; unreachable from 0: {missing}")

    if mode is LaplacianMode.NORMALIZED:
        m = tuple(sum((mu[(min(x, y), max(x, y))] for y in adj[x]), _to_number(0, exact)) for x in range(n))
    elif mode is LaplacianMode.PHYSICAL:
        m = tuple(_to_number(1, exact) for _ in range(n))
    else:
        absent = [x for x in range(n) if x not in measures]
        if absent:
            raise GraphError(f"custom mode requires a measure for every vertex; missing {absent}")
        m = tuple(_to_number(measures[x], exact) for x in range(n))
        for x, mx in enumerate(m):
            if not mx > 0:
                raise NonpositiveWeight(f"vertex {x} has non-positive measure {mx}")

    return WeightedGraph(
        n=n,
        edges=tuple(sorted(mu)),
        mu=mu,
        m=m,
        mode=mode,
        exact=exact,
        adj=adj,
    )


def with_mode(g: WeightedGraph, mode, *, exact: bool | None = None, measures=None) -> WeightedGraph:
    """Rebuild ``g`` with the same edges and weights under another mode or arithmetic."""
    if exact is None:
        exact = g.exact
    return build_graph(
        [(u, v, g.mu[(u, v)]) for u, v in g.edges],
        measures if measures is not None else dict(enumerate(g.m)),
        mode,
        n=g.n,
        exact=exact,
    )


def combinatorial_degree(g: WeightedGraph, x: int) -> int:
    return len(g.neighbors(x))


def weighted_degree(g: WeightedGraph, x: int):
    """``D_x = (1/m_x) * sum of incident edge weights``."""
    nbrs = g.neighbors(x)
    return sum((g.edge_mu(x, y) for y in nbrs), g.zero) / g.m[x]


def bfs_distances(g: WeightedGraph, x: int, *, skip_edge: tuple[int, int] | None = None) -> list:
    """Distances from ``x``; unreachable vertices get ``INF``.

    ``skip_edge`` removes one edge from the graph for the duration of the search.
    """
    g.check_vertex(x)
    dist = [INF] * g.n
    dist[x] = 0
    a, b = skip_edge if skip_edge is not None else (-1, -1)
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if (u == a and v == b) or (u == b and v == a):
                continue
            if dist[v] == INF:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(g: WeightedGraph, x: int, y: int) -> int:
    g.check_vertex(y)
    return bfs_distances(g, x)[y]


def sphere(g: WeightedGraph, x: int, r: int) -> list[int]:
    if r < 0:
        raise GraphError("radius must be non-negative")
    dist = bfs_distances(g, x)
    return [v for v in range(g.n) if dist[v] == r]


def girth_at(g: WeightedGraph, x: int):
    """Length of a shortest cycle through ``x``, or ``INF``.

    For each incident edge ``{x, y}``, the shortest cycle using it is one
    more than the distance from ``x`` to ``y`` with that edge removed.
    """
    best = INF
    for y in g.neighbors(x):
        d = bfs_distances(g, x, skip_edge=(x, y))[y]
        best = min(best, d + 1)
    return best


def girth(g: WeightedGraph):
    return min(girth_at(g, x) for x in g.vertices)


@dataclass(frozen=True)
class VertexNeighborhood:
    """Punctured ball of radius two: ``B_2(x)`` minus the edges inside ``S_2(x)``."""

    center: int
    sphere1: tuple[int, ...]
    sphere2: tuple[int, ...]
    hat_edges: frozenset[tuple[int, int]]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center,) + self.sphere1 + self.sphere2


def hat_b2(g: WeightedGraph, x: int) -> VertexNeighborhood:
    dist = bfs_distances(g, x)
    s1 = tuple(v for v in range(g.n) if dist[v] == 1)
    s2 = tuple(v for v in range(g.n) if dist[v] == 2)
    edges = frozenset(
        (u, v)
        for u, v in g.edges
        if dist[u] <= 2 and dist[v] <= 2 and (dist[u] <= 1 or dist[v] <= 1)
    )
    return VertexNeighborhood(center=x, sphere1=s1, sphere2=s2, hat_edges=edges)


def is_tree(neigh: VertexNeighborhood) -> bool:
    verts = neigh.vertices
    if len(neigh.hat_edges) != len(verts) - 1:
        return False
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in neigh.hat_edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {neigh.center}
    stack = [neigh.center]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(verts)
