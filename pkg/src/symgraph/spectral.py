"""Normalized Laplacian spectra of regular graphs.

Eigenvalues are those of ``-Delta = I - A/d`` so that ``Delta u + lam u = 0``
and all of them lie in ``[0, 2]``. Eigenfunctions are orthonormal for the
degree-weighted inner product ``<u, v> = d * sum(u * v)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from .errors import (
    AmbiguousGroupingWarning,
    CompleteGraphError,
    DisconnectedError,
    MatrixTooLargeError,
    NoConvergenceError,
)
from .graph import Graph, is_connected, regular_degree

MAX_ORDER = 2048
MAX_SWEEPS = 64
JACOBI_TOL = 1e-12
ZERO_SNAP = 1e-10
GROUPING_TOL = 1e-8


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Dense ``I - A/d`` for a connected regular graph."""
    d = regular_degree(g)
    if not is_connected(g):
        raise DisconnectedError("graph is not connected")
    m = np.eye(g.n)
    e = g.edge_array
    m[e[:, 0], e[:, 1]] = -1.0 / d
    m[e[:, 1], e[:, 0]] = -1.0 / d
    return m


def _round_robin(n: int) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Pairings of 0..n-1 (n even) covering every pair exactly once over n-1 rounds."""
    players = list(range(n))
    rounds = []
    for _ in range(n - 1):
        p = np.array(players[: n // 2], dtype=np.intp)
        q = np.array(players[n // 2:][::-1], dtype=np.intp)
        rounds.append((np.minimum(p, q), np.maximum(p, q)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def eigendecompose(
    m: np.ndarray,
    *,
    tol: float = JACOBI_TOL,
    max_sweeps: int = MAX_SWEEPS,
    max_order: int = MAX_ORDER,
) -> Tuple[np.ndarray, np.ndarray]:
    """All eigenpairs of a dense symmetric matrix by cyclic Jacobi rotations.

    Rotations are applied in round-robin order: each round annihilates
    ``n/2`` disjoint off-diagonal pairs at once, and ``n - 1`` rounds form
    one sweep over all pairs. Iteration stops once the off-diagonal
    Frobenius norm is at most ``tol * ||m||_F``.

    Returns ``(values, vectors)`` with values ascending (stable with respect
    to the final diagonal order) and orthonormal eigenvectors in columns.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > max_order:
        raise MatrixTooLargeError(f"order {n} exceeds the cap {max_order}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))

    # odd orders get a dummy index that never rotates (p or q == n)
    size = n + (n % 2)
    if size != n:
        a = np.pad(a, ((0, 1), (0, 1)))
    v = np.eye(size)
    rounds = _round_robin(size) if size > 1 else []
    target = tol * np.linalg.norm(a)

    off_diag = ~np.eye(size, dtype=bool)

    def off_norm():
        return np.linalg.norm(a[off_diag])

    sweeps = 0
    off = off_norm()
    while off > target:
        if sweeps == max_sweeps:
            raise NoConvergenceError(sweeps, off)
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            app, aqq = a[p, p], a[q, q]
            theta = (aqq - app) / (2.0 * apq)
            with np.errstate(over="ignore"):
                # theta**2 overflowing only drives t to 0, which is the right limit
                t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # A <- J^T A J with J[p,p]=J[q,q]=c, J[p,q]=s, J[q,p]=-s
            ap, aq = a[:, p], a[:, q]
            a[:, p], a[:, q] = c * ap - s * aq, s * ap + c * aq
            ap, aq = a[p, :], a[q, :]
            a[p, :], a[q, :] = c[:, None] * ap - s[:, None] * aq, s[:, None] * ap + c[:, None] * aq
            a[p, q] = 0.0
            a[q, p] = 0.0
            vp, vq = v[:, p], v[:, q]
            v[:, p], v[:, q] = c * vp - s * vq, s * vp + c * vq
        sweeps += 1
        off = off_norm()

    values = np.diag(a)[:n].copy()
    vectors = v[:n, :n]
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order].copy()


@dataclass(frozen=True)
class Spectrum:
    """Eigenpairs of ``-Delta``.

    ``eigenfunctions[:, i]`` is ``u_i`` with ``d * sum(u_i**2) == 1``.
    """

    eigenvalues: np.ndarray
    eigenfunctions: np.ndarray
    degree: int
    max_residual: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def __len__(self):
        return len(self.eigenvalues)

    def eigenfunction(self, i: int) -> np.ndarray:
        return self.eigenfunctions[:, i]

    @property
    def lambda1(self) -> float:
        return float(self.eigenvalues[1]) if self.n > 1 else float("nan")

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])


def spectrum(g: Graph) -> Spectrum:
    m = normalized_laplacian(g)
    d = g.degree
    values, vectors = eigendecompose(m)
    vectors = vectors / np.sqrt(d)
    if abs(values[0]) <= ZERO_SNAP:
        values[0] = 0.0
        vectors[:, 0] = 1.0 / np.sqrt(d * g.n)
    # Delta u + lam u = -(M u) + lam u
    residual = np.abs(m @ vectors - vectors * values).max()
    for arr in (values, vectors):
        arr.flags.writeable = False
    return Spectrum(values, vectors, d, float(residual))


@dataclass(frozen=True)
class EigGroup:
    value: float
    start: int
    stop: int
    basis: np.ndarray = field(repr=False)

    @property
    def multiplicity(self) -> int:
        return self.stop - self.start

    @property
    def indices(self) -> range:
        return range(self.start, self.stop)


@dataclass(frozen=True)
class EigGroups:
    groups: Tuple[EigGroup, ...]
    grouping_tol: float
    fragile: bool = False

    def __len__(self):
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)

    def __getitem__(self, i) -> EigGroup:
        return self.groups[i]

    def nonzero(self) -> Tuple[EigGroup, ...]:
        return tuple(grp for grp in self.groups if grp.value != 0.0)


def group_multiplicities(s: Spectrum, grouping_tol: float = GROUPING_TOL) -> EigGroups:
    """Cluster the sorted eigenvalues into multiplicity classes.

    A new group starts whenever the gap to the previous eigenvalue exceeds
    ``grouping_tol``. A gap within a factor 10 above the tolerance marks the
    grouping as fragile and emits :class:`AmbiguousGroupingWarning`.
    """
    if not grouping_tol > 0:
        raise ValueError("grouping_tol must be positive")
    lam = s.eigenvalues
    gaps = np.diff(lam)
    fragile = bool(np.any((gaps > grouping_tol) & (gaps < 10 * grouping_tol)))
    if fragile:
        warnings.warn(
            f"eigenvalue gap within (tol, 10*tol) for tol={grouping_tol:g}",
            AmbiguousGroupingWarning,
            stacklevel=2,
        )
    cuts = [0, *(int(i) + 1 for i in np.flatnonzero(gaps > grouping_tol)), len(lam)]
    groups = []
    for start, stop in zip(cuts[:-1], cuts[1:]):
        value = 0.0 if start == 0 and lam[0] == 0.0 else float(np.mean(lam[start:stop]))
        groups.append(EigGroup(value, start, stop, s.eigenfunctions[:, start:stop]))
    return EigGroups(tuple(groups), grouping_tol, fragile)


def mu_pair(groups: EigGroups) -> Tuple[float, int, float]:
    """``(mu1, m, mu2)``: first positive eigenvalue, its multiplicity, and the next one."""
    if len(groups) < 3:
        raise CompleteGraphError("fewer than three distinct eigenvalues; mu2 is undefined")
    first, second = groups[1], groups[2]
    return first.value, first.multiplicity, second.value


__all__ = [
    "EigGroup",
    "EigGroups",
    "GROUPING_TOL",
    "Spectrum",
    "eigendecompose",
    "group_multiplicities",
    "mu_pair",
    "normalized_laplacian",
    "spectrum",
]
