"""Isomorph-free enumeration of small connected graphs and classification runs.

Graphs on ``k + 1`` vertices are grown from the classes on ``k`` vertices by
attaching a new vertex to a subset of the old ones. Every connected graph
has a vertex whose removal keeps it connected, and deleting a vertex cannot
lower the girth, so growth from all smaller classes reaches every class.
A new vertex joined to ``a`` and ``b`` closes a cycle of length
``d(a, b) + 2``; subsets violating the girth floor are skipped outright.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .curvature import CD_ZERO_INF, cd_at, cd_at_generic
from .errors import BadConfig, BadParameter
from .families import FamilyDescriptor, FamilyKind, is_family_member, make_star
from .graph import INF, LaplacianMode, WeightedGraph, build_graph

MAX_VERTICES = 8


@dataclass(frozen=True)
class EnumerationConfig:
    max_vertices: int
    mode: LaplacianMode = LaplacianMode.NORMALIZED
    min_degree: int | None = None
    girth_floor: int = 5

    def __post_init__(self):
        object.__setattr__(self, "mode", LaplacianMode.parse(self.mode))
        if not isinstance(self.max_vertices, int) or not 2 <= self.max_vertices <= MAX_VERTICES:
            raise BadConfig(f"max_vertices must be in 2..{MAX_VERTICES}, got {self.max_vertices!r}")
        if self.girth_floor < 3:
            raise BadConfig("girth_floor must be at least 3")
        if self.min_degree is not None and self.min_degree < 0:
            raise BadConfig("min_degree must be non-negative")
        if self.mode is LaplacianMode.CUSTOM:
            raise BadConfig("enumeration runs on unweighted normalized or physical graphs")


def _all_distances(n: int, adj: list[set[int]]) -> list[list[float]]:
    dist = []
    for s in range(n):
        d = [INF] * n
        d[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if d[v] == INF:
                        d[v] = d[u] + 1
                        nxt.append(v)
            frontier = nxt
        dist.append(d)
    return dist


def _refined_cells(n: int, adj: list[set[int]]) -> list[list[int]]:
    """Ordered vertex partition from colour refinement, isomorphism invariant."""
    colour = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in adj[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(n: int, edges) -> tuple[int, tuple[int, ...], tuple[tuple[int, int], ...]]:
    """Return ``(n, code, relabelled_edges)`` minimising the upper-triangle bit string.

    The minimum runs over every ordering compatible with the refined
    partition. Because the partition is invariant, isomorphic graphs reach
    the same minimum.
    """
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    cells = _refined_cells(n, adj)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    best = None
    best_order = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        code = tuple(1 if order[j] in adj[order[i]] else 0 for i, j in pairs)
        if best is None or code < best:
            best, best_order = code, order
    position = {v: i for i, v in enumerate(best_order)}
    relabelled = tuple(sorted((min(position[u], position[v]), max(position[u], position[v])) for u, v in edges))
    return n, best, relabelled


def _grow(classes: dict, girth_floor: int) -> dict:
    out = {}
    for n, _, edges in classes.values():
        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        dist = _all_distances(n, adj)
        need = girth_floor - 2
        for size in range(1, n + 1):
            for subset in itertools.combinations(range(n), size):
                if any(dist[a][b] < need for a, b in itertools.combinations(subset, 2)):
                    continue
                new_edges = list(edges) + [(a, n) for a in subset]
                key = canonical_form(n + 1, new_edges)
                out.setdefault(key[:2], key)
    return out


def enumerate_classes(max_vertices: int, girth_floor: int = 5) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """All isomorphism classes of connected graphs on ``2..max_vertices`` vertices with girth ≥ floor.

    Returned as ``(n, canonical edges)`` sorted by vertex count, edge count, then code.
    """
    level = {}
    key = canonical_form(2, [(0, 1)])
    level[key[:2]] = key
    found = list(level.values())
    for _ in range(2, max_vertices):
        level = _grow(level, girth_floor)
        found.extend(level.values())
    found.sort(key=lambda k: (k[0], len(k[2]), k[1]))
    return [(n, edges) for n, _, edges in found]


def enumerate_graphs(cfg: EnumerationConfig) -> Iterator[WeightedGraph]:
    for n, edges in enumerate_classes(cfg.max_vertices, cfg.girth_floor):
        if cfg.min_degree is not None:
            deg = Counter()
            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
            if min(deg[x] for x in range(n)) < cfg.min_degree:
                continue
        yield build_graph(edges, mode=cfg.mode, n=n, exact=True)


def expected_families(cfg: EnumerationConfig) -> list[FamilyDescriptor]:
    """Family graphs predicted by the classification, restricted to ``cfg``'s scale.

    The physical list keeps ``Star_n`` for every ``n >= 3`` as claimed, so
    missing stars show up as omissions rather than being assumed away.
    """
    top = cfg.max_vertices
    out = [FamilyDescriptor(FamilyKind.PATH, (k,)) for k in range(1, top)]
    out += [FamilyDescriptor(FamilyKind.CYCLE, (n,)) for n in range(max(5, cfg.girth_floor), top + 1)]
    out += [FamilyDescriptor(FamilyKind.STAR, (n,)) for n in range(3, top)]
    if cfg.mode is LaplacianMode.NORMALIZED:
        out += [FamilyDescriptor(FamilyKind.STAR3EXT, (i,)) for i in (1, 2, 3) if 4 + i <= top]
    if cfg.min_degree is not None:
        out = [d for d in out if _min_degree(d) >= cfg.min_degree]
    return sorted(out, key=lambda d: d.sort_key)


def _min_degree(desc: FamilyDescriptor) -> int:
    return 2 if desc.kind is FamilyKind.CYCLE else 1


@dataclass
class ClassificationOutcome:
    config: EnumerationConfig
    survivors: list[tuple[WeightedGraph, FamilyDescriptor | None]]
    counts: dict[str, int]
    anomalies: list[tuple[WeightedGraph, FamilyDescriptor | None]]
    missing: list[FamilyDescriptor] = field(default_factory=list)
    examined: int = 0

    @property
    def confirmed(self) -> bool:
        return not self.anomalies

    @property
    def labels(self) -> list[str]:
        return [str(d) if d is not None else "Unclassified" for _, d in self.survivors]


def _family_label(desc: FamilyDescriptor) -> str:
    return desc.kind.value


def verify_classification(cfg: EnumerationConfig) -> ClassificationOutcome:
    """Run CD(0, inf) over every enumerated graph and compare survivors with the family list."""
    expected = expected_families(cfg)
    expected_set = set(expected)
    survivors = []
    anomalies = []
    examined = 0
    for g in enumerate_graphs(cfg):
        examined += 1
        if all(cd_at(g, x, CD_ZERO_INF) for x in g.vertices):
            desc = is_family_member(g)
            survivors.append((g, desc))
            if desc not in expected_set:
                anomalies.append((g, desc))
    survivors.sort(key=lambda s: (s[0].n, len(s[0].edges), s[1].sort_key if s[1] else ()))
    counts = Counter(_family_label(d) if d else "unclassified" for _, d in survivors)
    found = {d for _, d in survivors}
    missing = [d for d in expected if d not in found]
    return ClassificationOutcome(
        config=cfg,
        survivors=survivors,
        counts=dict(sorted(counts.items())),
        anomalies=anomalies,
        missing=missing,
        examined=examined,
    )


@dataclass(frozen=True)
class StarVerdict:
    n: int
    center_holds: bool
    leaf_holds: bool

    @property
    def holds(self) -> bool:
        return self.center_holds and self.leaf_holds


def resolve_star_question(max_n: int) -> list[StarVerdict]:
    """CD(0, inf) of ``Star_n`` under the unweighted physical Laplacian, ``n = 3..max_n``.

    Uses the generic exact PSD route at the centre and at one leaf (all
    leaves are equivalent), never the degree-pattern shortcut.
    """
    if not isinstance(max_n, int) or max_n < 6:
        raise BadParameter("max_n must be an integer >= 6")
    out = []
    for n in range(3, max_n + 1):
        g = make_star(n, LaplacianMode.PHYSICAL)
        out.append(
            StarVerdict(
                n=n,
                center_holds=cd_at_generic(g, 0, CD_ZERO_INF),
                leaf_holds=cd_at_generic(g, 1, CD_ZERO_INF),
            )
        )
    return out
