"""Discrete calculus on a d-regular graph.

Functions on vertices are 1-d float arrays of length ``n``. Sums over edges
run over the unordered pairs of ``g.edges`` in ascending ``(min, max)``
order, so results are reproducible bit for bit.
"""

from __future__ import annotations

import math

import numpy as np

from .graph import Graph, regular_degree, require_length

# beyond this many terms, global sums switch to compensated summation
COMPENSATED_TERMS = 10**5


def _vec(u) -> np.ndarray:
    return np.asarray(u, dtype=float)


def _total(terms: np.ndarray) -> float:
    if terms.size > COMPENSATED_TERMS:
        return math.fsum(terms.tolist())
    return float(np.sum(terms))


def _edge_scatter(g: Graph, values: np.ndarray) -> np.ndarray:
    """Per-vertex sums of an edge quantity symmetric in its endpoints."""
    e = g.edge_array
    return np.bincount(e[:, 0], values, g.n) + np.bincount(e[:, 1], values, g.n)


def apply_laplacian(g: Graph, u) -> np.ndarray:
    """``(Delta u)(x) = (1/d) * sum_{y~x} (u(y) - u(x))``."""
    d = regular_degree(g)
    u = _vec(u)
    require_length(g, u)
    e = g.edge_array
    nbr_sum = np.bincount(e[:, 0], u[e[:, 1]], g.n) + np.bincount(e[:, 1], u[e[:, 0]], g.n)
    return nbr_sum / d - u


def inner(g: Graph, u, v) -> float:
    """Degree-weighted inner product ``d * sum_x u(x) v(x)``."""
    d = regular_degree(g)
    u, v = _vec(u), _vec(v)
    require_length(g, u, v)
    return d * _total(u * v)


def norm_sq(g: Graph, u) -> float:
    return inner(g, u, u)


def grad_edge(u, x: int, y: int) -> float:
    """``nabla_xy u = u(y) - u(x)``."""
    return float(u[y] - u[x])


def edge_gradients(g: Graph, u) -> np.ndarray:
    """``nabla_xy u`` for every edge ``(x, y)`` of ``g.edges`` (x < y)."""
    u = _vec(u)
    e = g.edge_array
    return u[e[:, 1]] - u[e[:, 0]]


def gamma(g: Graph, u, v) -> np.ndarray:
    """Carré du champ ``Gamma(u, v)(x) = (1/2d) sum_{y~x} (nabla_xy u)(nabla_xy v)``."""
    d = regular_degree(g)
    u, v = _vec(u), _vec(v)
    require_length(g, u, v)
    prod = edge_gradients(g, u) * edge_gradients(g, v)
    return _edge_scatter(g, prod) / (2 * d)


def gamma_from_laplacian(g: Graph, u, v) -> np.ndarray:
    """``Gamma(u, v) = (Delta(uv) - (Delta u) v - u Delta v) / 2``."""
    u, v = _vec(u), _vec(v)
    require_length(g, u, v)
    return 0.5 * (apply_laplacian(g, u * v) - apply_laplacian(g, u) * v - u * apply_laplacian(g, v))


def dirichlet_energy(g: Graph, u) -> float:
    """``(1/2) * sum (nabla_xy u)^2`` over ordered adjacent pairs.

    Each edge is counted once here, so this equals ``d * sum_V Gamma(u, u)``.
    """
    grad = edge_gradients(g, u)
    return _total(grad * grad)


def rayleigh_quotient(g: Graph, u) -> float:
    """``sum (nabla u)^2 / (2 d sum u^2)`` with the sum over ordered adjacent pairs.

    Counting ordered pairs makes this ``<-Delta u, u> / <u, u>``, so the first
    nonconstant eigenfunction attains ``lambda_1``.
    """
    d = regular_degree(g)
    u = _vec(u)
    require_length(g, u)
    grad = edge_gradients(g, u)
    return _total(grad * grad) / (d * _total(u * u))


def phi(g: Graph, u_i, h) -> float:
    """Trial quantity ``sum_{x~y} u_i(x) u_i(y) (nabla_xy h)^2`` over unordered edges."""
    u_i, h = _vec(u_i), _vec(h)
    require_length(g, u_i, h)
    e = g.edge_array
    grad = edge_gradients(g, h)
    return _total(u_i[e[:, 0]] * u_i[e[:, 1]] * grad * grad)


def check_green(g: Graph, u, v) -> float:
    """``|<u, Delta v> + d * sum_x Gamma(u, v)(x)|``; zero in exact arithmetic."""
    d = regular_degree(g)
    lhs = inner(g, u, apply_laplacian(g, v))
    rhs = -d * _total(gamma(g, u, v))
    return abs(lhs - rhs)


def check_product_rule(g: Graph, u, v1, v2) -> float:
    """Largest deviation in the product rule for ``Gamma(u, v1 v2)``.

    Checks pointwise

        Gamma(u, v1 v2) = Gamma(u, v1) v2 + Gamma(u, v2) v1
                          + (1/2d) sum_{y~x} (nabla u)(nabla v1)(nabla v2)

    and the summed form without the third-order term, returning the larger
    of the two deviations.
    """
    d = regular_degree(g)
    u, v1, v2 = _vec(u), _vec(v1), _vec(v2)
    require_length(g, u, v1, v2)
    g1, g2 = gamma(g, u, v1), gamma(g, u, v2)
    lhs = gamma(g, u, v1 * v2)
    # the cubic term changes sign with edge orientation, so it cannot use _edge_scatter
    cube = edge_gradients(g, u) * edge_gradients(g, v1) * edge_gradients(g, v2)
    e = g.edge_array
    third = (np.bincount(e[:, 0], cube, g.n) - np.bincount(e[:, 1], cube, g.n)) / (2 * d)
    pointwise = np.abs(lhs - g1 * v2 - g2 * v1 - third).max()
    summed = abs(_total(lhs) - _total(g1 * v2 + g2 * v1))
    return float(max(pointwise, summed))


__all__ = [
    "apply_laplacian",
    "check_green",
    "check_product_rule",
    "dirichlet_energy",
    "edge_gradients",
    "gamma",
    "gamma_from_laplacian",
    "grad_edge",
    "inner",
    "norm_sq",
    "phi",
    "rayleigh_quotient",
]
