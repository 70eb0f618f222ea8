"""Curvature-dimension conditions CD(K, n) at vertices and on whole graphs.

Two decision routes are provided. The generic route assembles the local Γ₂
form, eliminates the second sphere exactly and runs a PSD test; it works at
every vertex. The closed-form route applies only when the vertex has girth
at least five, where the condition collapses to a form on the first sphere
built from the coefficients ``alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .calculus import local_forms
from .errors import GirthTooSmall, NotAdjacent, NotPending, WrongMode
from .graph import INF, LaplacianMode, WeightedGraph, girth_at, weighted_degree
from .psd import is_psd, min_eigenvalue, schur_eliminate


@dataclass(frozen=True)
class CurvatureParams:
    """Lower curvature bound ``K`` and dimension bound ``n`` in ``(0, inf]``."""

    K: object = 0
    n: object = INF

    def __post_init__(self):
        if not (self.n == INF or self.n > 0):
            raise ValueError(f"dimension must lie in (0, inf], got {self.n!r}")

    def inverse_n(self, g: WeightedGraph):
        return g.zero if self.n == INF else g.num(1) / g.num(self.n)

    def curvature(self, g: WeightedGraph):
        return g.num(self.K)


CD_ZERO_INF = CurvatureParams(0, INF)


def _dtype(g):
    return object if g.exact else float


def alpha(g: WeightedGraph, x: int, y: int):
    """``(m_x/mu_xy) * ((D_x + D_y)/2 - 2 mu_xy/m_y)`` for adjacent ``x, y``."""
    g.check_vertex(x)
    g.check_vertex(y)
    if not g.has_edge(x, y):
        raise NotAdjacent(f"{x} and {y} are not adjacent")
    mu = g.edge_mu(x, y)
    return g.m[x] / mu * ((weighted_degree(g, x) + weighted_degree(g, y)) / 2 - 2 * mu / g.m[y])


def reduced_forms(g: WeightedGraph, x: int):
    """Return ``(Γ₂ form, Γ form, Δ vector)`` on the first sphere, second sphere eliminated.

    Γ and Δ vanish on second-sphere coordinates, so minimising over them only
    touches the Γ₂ block and the result is valid for every ``K`` and ``n``.
    """
    forms = local_forms(g, x)
    k = forms.n_sphere1
    q = schur_eliminate(forms.gamma2_matrix, k)
    return q, forms.gamma_matrix[:k, :k], forms.laplacian_vector[:k]


def _generic_matrix(g, reduced, p: CurvatureParams):
    q, gam, lap = reduced
    return q - np.outer(lap, lap) * p.inverse_n(g) - gam * p.curvature(g)


def cd_at_generic(g: WeightedGraph, x: int, p: CurvatureParams = CD_ZERO_INF) -> bool:
    g.check_vertex(x)
    return is_psd(_generic_matrix(g, reduced_forms(g, x), p), exact=g.exact)


def girth5_matrix(g: WeightedGraph, x: int, p: CurvatureParams = CD_ZERO_INF):
    """``(1 - 2/n) w wᵀ - diag(w_y ((D_x+D_y)/2 - 2 mu_xy/m_y + K))`` with ``w_y = mu_xy/m_x``."""
    nbrs = g.neighbors(x)
    dx = weighted_degree(g, x)
    K = p.curvature(g)
    w = np.array([g.edge_mu(x, y) / g.m[x] for y in nbrs], dtype=_dtype(g))
    c = [
        w[i] * ((dx + weighted_degree(g, y)) / 2 - 2 * g.edge_mu(x, y) / g.m[y] + K)
        for i, y in enumerate(nbrs)
    ]
    mat = np.outer(w, w) * (1 - 2 * p.inverse_n(g))
    for i, ci in enumerate(c):
        mat[i, i] -= ci
    return mat


def cd_at_girth5(g: WeightedGraph, x: int, p: CurvatureParams = CD_ZERO_INF) -> bool:
    gx = girth_at(g, x)
    if gx < 5:
        raise GirthTooSmall(f"vertex {x} has girth {gx}")
    return is_psd(girth5_matrix(g, x, p), exact=g.exact)


def cd_at(g: WeightedGraph, x: int, p: CurvatureParams = CD_ZERO_INF) -> bool:
    if girth_at(g, x) >= 5:
        return cd_at_girth5(g, x, p)
    return cd_at_generic(g, x, p)


def cd_graph(g: WeightedGraph, p: CurvatureParams = CD_ZERO_INF) -> bool:
    return all(cd_at(g, x, p) for x in g.vertices)


def pending_cd(g: WeightedGraph, x: int) -> bool:
    """CD(0, inf) at a degree-one vertex: ``alpha_xy <= 1`` for its neighbour."""
    nbrs = g.neighbors(x)
    if len(nbrs) != 1:
        raise NotPending(f"vertex {x} has degree {len(nbrs)}")
    return alpha(g, x, nbrs[0]) <= 1


def q_count(g: WeightedGraph, x: int) -> tuple[list[int], int]:
    members = [y for y in g.neighbors(x) if alpha(g, x, y) > 0]
    return members, len(members)


def _require(g: WeightedGraph, mode: LaplacianMode):
    if g.mode is not mode or not g.is_unweighted:
        raise WrongMode(f"requires an unweighted {mode.value} graph")


def lemma33_pattern(g: WeightedGraph, x: int) -> bool:
    """Degree pattern allowed at a large-girth CD(0, inf) vertex, normalized Laplacian."""
    _require(g, LaplacianMode.NORMALIZED)
    dx = len(g.neighbors(x))
    nd = sorted(len(g.adj[y]) for y in g.adj[x])
    if dx == 1:
        return True
    if dx == 2:
        return nd == [1, 3] or max(nd) <= 2
    return max(nd) <= 2


def lemma42_pattern(g: WeightedGraph, x: int) -> bool:
    """Degree pattern allowed at a large-girth CD(0, inf) vertex, physical Laplacian.

    A branching vertex must have degree exactly 3 with leaf neighbours:
    ``q_x = 0`` forces ``d_x + d_y <= 4``. Star centres of degree 4 or more fail.
    """
    _require(g, LaplacianMode.PHYSICAL)
    dx = len(g.neighbors(x))
    nd = [len(g.adj[y]) for y in g.adj[x]]
    if dx == 1:
        return nd[0] <= 5
    if dx == 2:
        return max(nd) <= 2
    return dx == 3 and max(nd) == 1


def _bracket_radius(g: WeightedGraph, x: int):
    dx = weighted_degree(g, x)
    return 4 * max(dx + weighted_degree(g, y) for y in g.neighbors(x))


def curvature_value_at(g: WeightedGraph, x: int, n=INF, *, tol: float = 1e-12) -> float:
    """Largest ``K`` such that CD(K, n) holds at ``x``, by bisection.

    Exact graphs bisect over dyadic rationals with the exact PSD test, so a
    boundary at ``K = 0`` is returned as exactly zero (the symmetric bracket
    makes zero the first midpoint). Float graphs use the eigenvalue test
    without slack, so the result tracks the true boundary rather than the
    tolerance band of :func:`cd_at_generic`.
    """
    g.check_vertex(x)
    if not g.neighbors(x):
        raise ValueError("curvature requires a vertex of positive degree")
    reduced = reduced_forms(g, x)

    def holds(K) -> bool:
        mat = _generic_matrix(g, reduced, CurvatureParams(K, n))
        if g.exact:
            return is_psd(mat, exact=True)
        return min_eigenvalue(mat) >= 0.0

    radius = g.num(_bracket_radius(g, x))
    if not g.exact:
        radius = float(radius)
    lo, hi = -radius, radius
    while not holds(lo) or holds(hi):
        lo, hi = 2 * lo, 2 * hi
        if abs(lo) > 1e12:
            raise ArithmeticError("failed to bracket the curvature value")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return float(lo)


def curvature_value_eig(g: WeightedGraph, x: int, n=INF) -> float:
    """Closed-form counterpart of :func:`curvature_value_at` via a generalised eigenproblem.

    The Γ form on the first sphere is diagonal and positive, so the largest
    admissible ``K`` is the smallest eigenvalue of ``G^{-1/2} A G^{-1/2}``.
    """
    q, gam, lap = reduced_forms(g, x)
    a = _generic_matrix(g, (q, gam, lap), CurvatureParams(0, n)).astype(float)
    s = 1.0 / np.sqrt(np.diag(gam.astype(float)))
    return min_eigenvalue(a * np.outer(s, s))


@dataclass(frozen=True)
class CurvatureReport:
    vertex: int
    degree: int
    girth_at: object
    alpha: dict = field(repr=False)
    q: int
    cd_zero_infinity: bool
    curvature_value: float


def curvature_report(g: WeightedGraph, x: int, n=INF) -> CurvatureReport:
    alphas = {y: alpha(g, x, y) for y in g.neighbors(x)}
    return CurvatureReport(
        vertex=x,
        degree=len(g.neighbors(x)),
        girth_at=girth_at(g, x),
        alpha=alphas,
        q=sum(1 for a in alphas.values() if a > 0),
        cd_zero_infinity=cd_at(g, x, CD_ZERO_INF),
        curvature_value=curvature_value_at(g, x, n),
    )


def curvature_map(g: WeightedGraph, n=INF) -> list[CurvatureReport]:
    return [curvature_report(g, x, n) for x in g.vertices]

