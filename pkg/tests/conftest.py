import itertools
import math

import numpy as np
import pytest

from cdgraphs import LaplacianMode, build_graph


def random_connected_edges(rng, n, extra_p):
    """Random spanning tree plus independent extra edges."""
    edges = set()
    for v in range(1, n):
        u = int(rng.integers(0, v))
        edges.add((u, v))
    for u, v in itertools.combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra_p:
            edges.add((u, v))
    return sorted(edges)


def random_weighted_graph(rng, n=None, extra_p=0.3, mode=None):
    """Float graph with weights in (0.1, 5] and, in custom mode, measures in (0, 10]."""
    if n is None:
        n = int(rng.integers(2, 13))
    if mode is None:
        mode = [LaplacianMode.NORMALIZED, LaplacianMode.PHYSICAL, LaplacianMode.CUSTOM][int(rng.integers(0, 3))]
    edges = [(u, v, float(rng.uniform(0.1, 5.0))) for u, v in random_connected_edges(rng, n, extra_p)]
    measures = {x: float(10.0 - rng.uniform(0.0, 9.99)) for x in range(n)}
    return build_graph(edges, measures, mode, n=n)


def random_unweighted_graph(rng, n=None, extra_p=0.3, mode=LaplacianMode.NORMALIZED):
    if n is None:
        n = int(rng.integers(2, 13))
    return build_graph(random_connected_edges(rng, n, extra_p), mode=mode, n=n)


def brute_force_girth_at(g, x):
    """Shortest cycle through ``x`` by enumerating every simple path that returns to ``x``."""
    best = math.inf

    def walk(path, seen):
        nonlocal best
        u = path[-1]
        for v in g.adj[u]:
            if v == x and len(path) >= 3:
                best = min(best, len(path))
            elif v not in seen:
                seen.add(v)
                path.append(v)
                walk(path, seen)
                path.pop()
                seen.remove(v)

    walk([x], {x})
    return best


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def local_tree(dx, neighbor_degrees, mode="normalized"):
    """Tree around vertex 0 with the given neighbour degrees (extra leaves hang off each neighbour)."""
    assert len(neighbor_degrees) == dx
    edges = []
    nxt = dx + 1
    for i, d in enumerate(neighbor_degrees, start=1):
        edges.append((0, i))
        for _ in range(d - 1):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(edges, mode=mode, n=nxt)


def random_sparse_graph(rng, n=None, weighted=False, mode=None):
    """Tree plus a couple of chords, so that many vertices have girth at least 5."""
    if n is None:
        n = int(rng.integers(3, 13))
    p = float(rng.uniform(0.0, 2.5 / max(n, 1)))
    if weighted:
        return random_weighted_graph(rng, n, p, mode)
    return random_unweighted_graph(rng, n, p, mode or LaplacianMode.NORMALIZED)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
