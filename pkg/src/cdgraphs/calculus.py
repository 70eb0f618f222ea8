"""Laplacian, carré du champ, iterated gradient form and local quadratic forms.

Functions on vertices are anything indexable by vertex id (lists, numpy
arrays, dicts covering the vertices that are read). All scalar routines are
generic over the arithmetic of the values passed in, so feeding
``Fraction`` values into an exact graph yields exact results.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import WeightedGraph, bfs_distances, weighted_degree


def laplacian_at(g: WeightedGraph, f, x: int):
    """``(1/m_x) * sum_y mu_xy (f(y) - f(x))``."""
    g.check_vertex(x)
    fx = f[x]
    total = g.zero
    for y in g.neighbors(x):
        total += g.edge_mu(x, y) * (f[y] - fx)
    return total / g.m[x]


def gamma_at(g: WeightedGraph, f, h, x: int):
    """Carré du champ ``Γ(f, h)(x)`` from the gradient-sum formula."""
    g.check_vertex(x)
    fx, hx = f[x], h[x]
    total = g.zero
    for y in g.neighbors(x):
        total += g.edge_mu(x, y) * (f[y] - fx) * (h[y] - hx)
    return total / (2 * g.m[x])


def gamma_from_products_at(g: WeightedGraph, f, h, x: int):
    """``Γ(f, h)(x) = ½(Δ(fh) - fΔh - hΔf)(x)``, evaluated literally."""
    fh = _LocalProduct(f, h)
    return (laplacian_at(g, fh, x) - f[x] * laplacian_at(g, h, x) - h[x] * laplacian_at(g, f, x)) / 2


class _LocalProduct:
    def __init__(self, f, h):
        self.f, self.h = f, h

    def __getitem__(self, v):
        return self.f[v] * self.h[v]


class _Lazy:
    """Vertex function whose values are computed on demand and cached."""

    def __init__(self, fn):
        self.fn = fn
        self.cache = {}

    def __getitem__(self, v):
        try:
            return self.cache[v]
        except KeyError:
            value = self.cache[v] = self.fn(v)
            return value


def gamma2_at(g: WeightedGraph, f, h, x: int):
    """``Γ₂(f, h)(x) = ½(ΔΓ(f,h) - Γ(f,Δh) - Γ(h,Δf))(x)`` by direct composition."""
    g.check_vertex(x)
    gam = _Lazy(lambda v: gamma_at(g, f, h, v))
    lap_f = _Lazy(lambda v: laplacian_at(g, f, v))
    lap_h = lap_f if h is f else _Lazy(lambda v: laplacian_at(g, h, v))
    return (laplacian_at(g, gam, x) - gamma_at(g, f, lap_h, x) - gamma_at(g, h, lap_f, x)) / 2


def hessian_norm_sq(g: WeightedGraph, f, x: int):
    """Discrete squared Hessian norm, summed over all walks ``x ~ y ~ z`` (``z = x`` included)."""
    g.check_vertex(x)
    fx = f[x]
    mx = g.m[x]
    total = g.zero
    for y in g.neighbors(x):
        fy = f[y]
        coeff = g.edge_mu(x, y) / (mx * g.m[y])
        inner = g.zero
        for z in g.adj[y]:
            second = fx - 2 * fy + f[z]
            inner += g.edge_mu(y, z) * second * second
        total += coeff * inner
    return total


def gamma2_bochner_at(g: WeightedGraph, f, x: int):
    """``Γ₂(f)(x)`` through the Bochner-type identity with the Hessian term."""
    lap = laplacian_at(g, f, x)
    dx = weighted_degree(g, x)
    fx = f[x]
    correction = g.zero
    for y in g.neighbors(x):
        diff = f[y] - fx
        correction += g.edge_mu(x, y) / g.m[x] * (dx + weighted_degree(g, y)) * diff * diff
    return hessian_norm_sq(g, f, x) / 4 + lap * lap / 2 - correction / 4


@dataclass(frozen=True)
class LocalForms:
    """Γ₂, Γ and Δ at ``center`` as matrices over ``coords`` (``S_1`` then ``S_2``).

    The forms act on functions normalised by ``f(center) = 0``.
    """

    center: int
    coords: tuple[int, ...]
    n_sphere1: int
    gamma2_matrix: np.ndarray
    gamma_matrix: np.ndarray
    laplacian_vector: np.ndarray
    exact: bool

    def vector(self, f) -> np.ndarray:
        """Coordinates of ``f - f(center)`` in this chart."""
        base = f[self.center]
        dtype = object if self.exact else float
        return np.array([f[v] - base for v in self.coords], dtype=dtype)


def local_forms(g: WeightedGraph, x: int) -> LocalForms:
    """Assemble the local Γ₂, Γ and Δ forms at ``x``.

    Each Γ-calculus operator is linear in the function
    values on ``B_2(x)``, so Γ at a vertex is a matrix, Δ at a vertex is a row,
    and Γ₂ follows by composing them exactly as in its definition.
    """
    dist = bfs_distances(g, x)
    s1 = [v for v in range(g.n) if dist[v] == 1]
    s2 = [v for v in range(g.n) if dist[v] == 2]
    order = [x] + s1 + s2
    index = {v: i for i, v in enumerate(order)}
    size = len(order)
    dtype = object if g.exact else float
    zero = g.zero

    def zeros(*shape):
        return np.full(shape, zero, dtype=dtype)

    def lap_row(v):
        row = zeros(size)
        mv = g.m[v]
        for w in g.adj[v]:
            c = g.edge_mu(v, w) / mv
            row[index[w]] += c
            row[index[v]] -= c
        return row

    def gamma_mat(v):
        mat = zeros(size, size)
        mv = g.m[v]
        iv = index[v]
        for w in g.adj[v]:
            c = g.edge_mu(v, w) / (2 * mv)
            iw = index[w]
            mat[iw, iw] += c
            mat[iv, iv] += c
            mat[iw, iv] -= c
            mat[iv, iw] -= c
        return mat

    mx = g.m[x]
    gx = gamma_mat(x)
    ax = lap_row(x)
    lap_gamma = zeros(size, size)
    cross = zeros(size, size)
    for y in s1:
        w = g.edge_mu(x, y) / mx
        lap_gamma += (gamma_mat(y) - gx) * w
        grad = zeros(size)
        grad[index[y]] += 1
        grad[0] -= 1
        cross += np.outer(grad, lap_row(y) - ax) * (w / 2)
    q = (lap_gamma - cross - cross.T) / 2

    return LocalForms(
        center=x,
        coords=tuple(s1 + s2),
        n_sphere1=len(s1),
        gamma2_matrix=q[1:, 1:],
        gamma_matrix=gx[1:, 1:],
        laplacian_vector=ax[1:],
        exact=g.exact,
    )
