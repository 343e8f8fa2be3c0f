"""Numerical certificates for eigenvalue inequalities and constancy lemmas.

Every check returns a record carrying both sides, the slack ``rhs - lhs``
and the tolerance it was judged with, so callers can report margins rather
than bare booleans.

The eigenvalue-gap checks (``check_thm_1_1``, ``check_thm_1_2``,
``check_cor_1_3``) and the arc-constancy checks only hold on symmetric
(arc-transitive) graphs. They take the classification outcome as
``arc_transitive``; without a positive answer they raise unless
``assume_symmetric`` is set, or ``tag_unverified`` asks for a record tagged
``hypothesis_unverified`` instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from . import calculus
from .errors import (
    BadNError,
    DenominatorNonpositiveError,
    KOutOfRangeError,
    LambdaNotEigenvalueError,
    NotArcTransitiveError,
    NotMonotoneError,
    NotVertexTransitiveError,
    SymmetryNotEstablishedError,
)
from .graph import Graph, is_connected, regular_degree, require_length
from .spectral import GROUPING_TOL, EigGroup, EigGroups, Spectrum, mu_pair

INEQ_TOL = 1e-7
EQUALITY_TOL = 1e-9
PARTIAL_SUM_TOL = 1e-8
CONSTANCY_TOL = 1e-8
ROTATION_TOL = 1e-9
ROTATIONS = 5
ROTATION_SEED = 20200613

UNVERIFIED = "hypothesis_unverified"
ASSUMED = "hypothesis_assumed"
FRAGILE = "fragile_grouping"


@dataclass(frozen=True)
class InequalityRecord:
    """One checked instance of ``lhs <= rhs`` (or ``==`` / strict ``<``).

    ``kind`` is ``"le"`` (pass iff slack >= -tolerance), ``"lt"`` (pass iff
    slack > tolerance) or ``"eq"`` (pass iff |slack| <= tolerance).
    """

    name: str
    params: Dict[str, float]
    lhs: float
    rhs: float
    tolerance: float
    kind: str = "le"
    note: str = ""
    slack: float = field(init=False)
    passed: bool = field(init=False)

    def __post_init__(self):
        lhs, rhs = float(self.lhs), float(self.rhs)
        if not (math.isfinite(lhs) and math.isfinite(rhs)):
            raise ValueError(f"{self.name}: non-finite sides lhs={lhs}, rhs={rhs}")
        slack = rhs - lhs
        if self.kind == "le":
            ok = slack >= -self.tolerance
        elif self.kind == "lt":
            ok = slack > self.tolerance
        elif self.kind == "eq":
            ok = abs(slack) <= self.tolerance
        else:
            raise ValueError(f"unknown record kind {self.kind!r}")
        object.__setattr__(self, "lhs", lhs)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "slack", slack)
        object.__setattr__(self, "passed", bool(ok))


@dataclass(frozen=True)
class ConstancyRecord:
    """Observed spread of a quantity predicted to be constant.

    ``max_deviation`` is ``max |observed - predicted|`` for the given basis;
    ``rotation_deviation`` is the largest change of the observed values
    under random orthogonal changes of basis within the eigenspace.
    """

    name: str
    params: Dict[str, float]
    predicted_value: float
    observed_mean: float
    max_deviation: float
    rotation_deviation: float
    basis_rotations_tested: int
    tolerance: float = CONSTANCY_TOL
    rotation_tolerance: float = ROTATION_TOL
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance and self.rotation_deviation <= self.rotation_tolerance


def _rel_tol(tol, *values):
    return tol * max(1.0, *(abs(v) for v in values))


def _gate(holds, assume, tag, error_cls, what):
    if holds is True:
        return ""
    if assume:
        return ASSUMED
    if tag:
        return UNVERIFIED
    raise error_cls(f"{what} not established; pass assume_symmetric=True to override")


def _check_k(k, n):
    if not 0 <= k <= n - 2:
        raise KOutOfRangeError(f"k={k} outside 0..{n - 2}")


# -- eigenvalue gaps -----------------------------------------------------------------


def check_thm_1_1(
    s: Spectrum,
    k: int,
    lam: float,
    *,
    arc_transitive: Optional[bool] = None,
    assume_symmetric: bool = False,
    tag_unverified: bool = False,
    tol: float = INEQ_TOL,
    grouping_tol: float = GROUPING_TOL,
) -> InequalityRecord:
    """Check, for a nonzero eigenvalue ``lam``,

        sum_{i<=k} (l_{k+1} - l_i)^2 (1 - l_i)
            <= sum_{i<=k} (l_{k+1} - l_i) (2 (2 - lam) l_i + lam).
    """
    note = _gate(arc_transitive, assume_symmetric, tag_unverified,
                 SymmetryNotEstablishedError, "arc-transitivity")
    lam_all = s.eigenvalues
    _check_k(k, len(lam_all))
    if lam <= grouping_tol or np.abs(lam_all - lam).min() > grouping_tol:
        raise LambdaNotEigenvalueError(f"{lam!r} is not a nonzero eigenvalue")
    li = lam_all[: k + 1]
    gap = lam_all[k + 1] - li
    lhs = float(np.sum(gap * gap * (1.0 - li)))
    rhs = float(np.sum(gap * (2.0 * (2.0 - lam) * li + lam)))
    return InequalityRecord(
        "thm11", {"k": k, "lambda": float(lam)}, lhs, rhs, _rel_tol(tol, lhs, rhs), note=note
    )


def thm_1_2_bound(s: Spectrum, k: int) -> float:
    """Upper bound on ``lambda_{k+1}`` from ``lambda_1..lambda_k``."""
    lam = s.eigenvalues
    _check_k(k, len(lam))
    l1 = lam[1]
    li = lam[1 : k + 1]
    numer = (k + 1) * l1 + np.sum((5.0 - 2.0 * l1) * li - li * li)
    denom = np.sum(1.0 - lam[: k + 1])
    if denom <= PARTIAL_SUM_TOL:
        raise DenominatorNonpositiveError(f"sum_(i<=k)(1 - lambda_i) = {denom!r} at k={k}")
    return float(numer / denom)


def check_thm_1_2(
    s: Spectrum,
    k: int,
    *,
    arc_transitive: Optional[bool] = None,
    assume_symmetric: bool = False,
    tag_unverified: bool = False,
    tol: float = INEQ_TOL,
) -> InequalityRecord:
    note = _gate(arc_transitive, assume_symmetric, tag_unverified,
                 SymmetryNotEstablishedError, "arc-transitivity")
    bound = thm_1_2_bound(s, k)
    lhs = float(s.eigenvalues[k + 1])
    return InequalityRecord("thm12", {"k": k}, lhs, bound, _rel_tol(tol, lhs, bound), note=note)


def cor_1_3_closed_form(mu1: float, m: int) -> float:
    """``(6m + 1 - 3m mu1) / (m + 1 - m mu1)``, the ``thm_1_2_bound`` at k = m divided by mu1."""
    return (6 * m + 1 - 3 * m * mu1) / (m + 1 - m * mu1)


def check_cor_1_3(
    groups: EigGroups,
    *,
    arc_transitive: Optional[bool] = None,
    assume_symmetric: bool = False,
    tag_unverified: bool = False,
    tol: float = INEQ_TOL,
) -> InequalityRecord:
    """``mu2 / mu1 <= 3 m + 1``; raises :class:`CompleteGraphError` when mu2 is undefined."""
    note = _gate(arc_transitive, assume_symmetric, tag_unverified,
                 SymmetryNotEstablishedError, "arc-transitivity")
    mu1, m, mu2 = mu_pair(groups)
    if groups.fragile:
        note = ",".join(filter(None, [note, FRAGILE]))
    lhs, rhs = mu2 / mu1, 3.0 * m + 1.0
    return InequalityRecord(
        "cor13", {"m": m, "mu1": mu1, "mu2": mu2}, lhs, rhs, _rel_tol(tol, lhs, rhs), note=note
    )


def check_cor_1_3_consistency(
    s: Spectrum, groups: EigGroups, tol: float = INEQ_TOL
) -> List[InequalityRecord]:
    """Tie the multiplicity ratio to ``thm_1_2_bound`` at ``k = m``.

    Returns two records: ``mu2 <= bound(k=m)`` and
    ``closed_form(mu1, m) <= 3m + 1`` (which requires ``mu1 <= 1``).
    """
    mu1, m, mu2 = mu_pair(groups)
    bound = thm_1_2_bound(s, m)
    closed = cor_1_3_closed_form(mu1, m)
    return [
        InequalityRecord("cor13_thm12_bound", {"k": m}, mu2, bound, _rel_tol(tol, mu2, bound)),
        InequalityRecord("cor13_closed_form", {"m": m, "mu1": mu1}, closed, 3.0 * m + 1.0,
                         _rel_tol(tol, closed, 3 * m + 1)),
    ]


# -- general regular graphs ---------------------------------------------------------------------


def check_lambda1_bound(g: Graph, s: Spectrum, tol: float = INEQ_TOL) -> InequalityRecord:
    """``lambda_1 <= 1`` off complete graphs; ``lambda_1 == 1 + 1/d`` on them."""
    d = regular_degree(g)
    l1 = float(s.eigenvalues[1])
    if g.is_complete:
        return InequalityRecord("lemma21", {"d": d}, l1, 1.0 + 1.0 / d, EQUALITY_TOL, kind="eq",
                                note="complete")
    return InequalityRecord("lemma21", {"d": d}, l1, 1.0, _rel_tol(tol, l1, 1.0))


def check_trial_lemma(
    g: Graph, s: Spectrum, h, k: int, tol: float = INEQ_TOL
) -> InequalityRecord:
    """Check, for an arbitrary function ``h``,

        (1/2) sum_{i<=k} (l_{k+1} - l_i)^2 Phi_i(h)
            <= sum_{i<=k} (l_{k+1} - l_i) ||2 Gamma(h, u_i) + u_i Delta h||^2.

    Valid on every connected regular graph.
    """
    h = np.asarray(h, dtype=float)
    lam = s.eigenvalues
    _check_k(k, len(lam))
    require_length(g, h)
    lap_h = calculus.apply_laplacian(g, h)
    lhs = rhs = 0.0
    for i in range(k + 1):
        u = s.eigenfunctions[:, i]
        gap = lam[k + 1] - lam[i]
        lhs += 0.5 * gap * gap * calculus.phi(g, u, h)
        rhs += gap * calculus.norm_sq(g, 2.0 * calculus.gamma(g, h, u) + u * lap_h)
    return InequalityRecord("lemma23", {"k": k}, lhs, rhs, _rel_tol(tol, lhs, rhs))


def check_partial_sums(s: Spectrum, tol: float = PARTIAL_SUM_TOL) -> List[InequalityRecord]:
    """``sum_{i<=k} (1 - l_i)`` is positive for k < N-1 and vanishes at k = N-1."""
    sums = np.cumsum(1.0 - s.eigenvalues)
    last = len(sums) - 1
    return [
        InequalityRecord("partial_sums", {"k": k}, 0.0, float(total), tol,
                         kind="eq" if k == last else "lt")
        for k, total in enumerate(sums)
    ]


def chebyshev_sum(a: Sequence[float], b: Sequence[float], tol: float = 1e-12) -> InequalityRecord:
    """``mean(a) * mean(b) <= mean(a * b)`` for two non-increasing sequences."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1 or a.size == 0:
        raise ValueError("sequences must be 1-d, non-empty and of equal length")
    for which, seq in (("a", a), ("b", b)):
        rising = np.flatnonzero(np.diff(seq) > 0)
        if rising.size:
            raise NotMonotoneError(which, int(rising[0]) + 1)
    n = a.size
    lhs = float(a.sum() * b.sum() / (n * n))
    rhs = float(np.dot(a, b) / n)
    scale = max(1.0, float(np.abs(a).max() * np.abs(b).max()))
    return InequalityRecord("chebyshev", {"n": n}, lhs, rhs, tol * scale)


# -- constancy on symmetric graphs -----------------------------------------------


def _basis_of(group):
    basis = group.basis if isinstance(group, EigGroup) else group
    basis = np.asarray(basis, dtype=float)
    return basis[:, None] if basis.ndim == 1 else basis


def _rotations(m, count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        q, r = np.linalg.qr(rng.standard_normal((m, m)))
        yield q * np.sign(np.diag(r))


def _constancy(name, params, observe, basis, predicted, rotations, seed, note):
    observed = observe(basis)
    rot_dev = 0.0
    for q in _rotations(basis.shape[1], rotations, seed):
        rot_dev = max(rot_dev, float(np.abs(observe(basis @ q) - observed).max()))
    return ConstancyRecord(
        name,
        params,
        float(predicted),
        float(np.mean(observed)),
        float(np.abs(observed - predicted).max()),
        rot_dev,
        rotations,
        note=note,
    )


def check_constancy_3_1(
    g: Graph,
    group,
    *,
    vertex_transitive: Optional[bool] = None,
    assume_symmetric: bool = False,
    tag_unverified: bool = False,
    rotations: int = ROTATIONS,
    seed: int = ROTATION_SEED,
) -> ConstancyRecord:
    """``f(x) = sum_a u_a(x)^2`` equals ``m / (d N)`` on a vertex-transitive graph."""
    note = _gate(vertex_transitive, assume_symmetric, tag_unverified,
                 NotVertexTransitiveError, "vertex-transitivity")
    d = regular_degree(g)
    basis = _basis_of(group)
    m = basis.shape[1]
    params = {"m": m}
    if isinstance(group, EigGroup):
        params["lambda"] = group.value
    return _constancy("const31", params, lambda b: np.sum(b * b, axis=1), basis,
                      m / (d * g.n), rotations, seed, note)


def check_constancy_3_2(
    g: Graph,
    group,
    lam: float,
    *,
    arc_transitive: Optional[bool] = None,
    assume_symmetric: bool = False,
    tag_unverified: bool = False,
    rotations: int = ROTATIONS,
    seed: int = ROTATION_SEED,
) -> ConstancyRecord:
    """``g(x, y) = sum_a (nabla_xy u_a)^2`` equals ``m lam / #E`` on every edge."""
    note = _gate(arc_transitive, assume_symmetric, tag_unverified,
                 NotArcTransitiveError, "arc-transitivity")
    basis = _basis_of(group)
    m = basis.shape[1]
    e = g.edge_array

    def observe(b):
        grad = b[e[:, 1]] - b[e[:, 0]]
        return np.sum(grad * grad, axis=1)

    return _constancy("const32", {"m": m, "lambda": float(lam)}, observe, basis,
                      m * lam / g.edge_count, rotations, seed, note)


def check_constancy_3_3(
    g: Graph,
    group,
    lam: float,
    *,
    arc_transitive: Optional[bool] = None,
    assume_symmetric: bool = False,
    tag_unverified: bool = False,
    rotations: int = ROTATIONS,
    seed: int = ROTATION_SEED,
) -> ConstancyRecord:
    """``f3(x, y) = sum_a u_a(x) nabla_xy u_a`` equals ``-lam m / (2 #E)`` on every arc."""
    note = _gate(arc_transitive, assume_symmetric, tag_unverified,
                 NotArcTransitiveError, "arc-transitivity")
    basis = _basis_of(group)
    m = basis.shape[1]
    arcs = np.array(g.arcs, dtype=np.intp).reshape(-1, 2)

    def observe(b):
        tail = b[arcs[:, 0]]
        return np.sum(tail * (b[arcs[:, 1]] - tail), axis=1)

    return _constancy("const33", {"m": m, "lambda": float(lam)}, observe, basis,
                      -lam * m / (2 * g.edge_count), rotations, seed, note)


# -- cycles -------------------------------------------------------------------------


def cycle_gap(n: int) -> float:
    """Smallest positive eigenvalue of the N-cycle, ``1 - cos(2 pi / N)``."""
    if n < 3:
        raise BadNError(f"cycle needs N >= 3, got {n}")
    return 1.0 - math.cos(2.0 * math.pi / n)


def nontriviality_threshold() -> int:
    """Smallest N >= 3 with ``7 (1 - cos(2 pi / N)) < 2``.

    From there on the multiplicity-2 ratio bound ``mu2 <= 7 mu1`` on the
    N-cycle is sharper than the trivial ``mu2 <= 2``.
    """
    n = 3
    while 7.0 * cycle_gap(n) >= 2.0:
        n += 1
    return n


def check_cycle(g: Graph, groups: EigGroups) -> List[InequalityRecord]:
    """Cycle-specific facts: the gap closed form, its multiplicity 2, and non-triviality."""
    n = g.n
    mu1 = groups[1].value
    m = groups[1].multiplicity
    nontrivial = 7.0 * mu1 < 2.0
    return [
        InequalityRecord("cycle_gap", {"n": n}, mu1, cycle_gap(n), EQUALITY_TOL, kind="eq"),
        InequalityRecord("cycle_multiplicity", {"n": n}, float(m), 2.0, 0.0, kind="eq"),
        InequalityRecord(
            "cycle_nontrivial", {"n": n}, float(nontrivial), float(n >= nontriviality_threshold()),
            0.0, kind="eq", note="nontrivial" if nontrivial else "trivial",
        ),
    ]


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.degree == 2 and is_connected(g)


__all__ = [
    "ConstancyRecord",
    "InequalityRecord",
    "chebyshev_sum",
    "check_constancy_3_1",
    "check_constancy_3_2",
    "check_constancy_3_3",
    "check_cor_1_3",
    "check_cor_1_3_consistency",
    "check_cycle",
    "check_lambda1_bound",
    "check_partial_sums",
    "check_thm_1_1",
    "check_thm_1_2",
    "check_trial_lemma",
    "cor_1_3_closed_form",
    "cycle_gap",
    "is_cycle",
    "nontriviality_threshold",
    "thm_1_2_bound",
]
