import warnings

import numpy as np
import pytest

import oracles
from symgraph import generators as gen
from symgraph.calculus import apply_laplacian, rayleigh_quotient
from symgraph.errors import (
    AmbiguousGroupingWarning,
    CompleteGraphError,
    DegreeZeroError,
    DisconnectedError,
    MatrixTooLargeError,
    NoConvergenceError,
    NotRegularError,
)
from symgraph.graph import from_edge_list
from symgraph.spectral import (
    Spectrum,
    eigendecompose,
    group_multiplicities,
    mu_pair,
    normalized_laplacian,
    spectrum,
)

from conftest import small_corpus


def test_laplacian_k2():
    assert np.array_equal(normalized_laplacian(gen.complete(2)), [[1, -1], [-1, 1]])


def test_laplacian_triangle():
    m = normalized_laplacian(gen.cycle(3))
    assert np.array_equal(np.diag(m), np.ones(3))
    off = m[~np.eye(3, dtype=bool)]
    assert np.all(off == -0.5)


def test_laplacian_preconditions():
    with pytest.raises(NotRegularError):
        normalized_laplacian(from_edge_list(3, [(0, 1), (1, 2)]))
    with pytest.raises(DisconnectedError):
        normalized_laplacian(from_edge_list(4, [(0, 1), (2, 3)]))
    with pytest.raises(DegreeZeroError):
        normalized_laplacian(from_edge_list(1, []))


def test_eigendecompose_identity():
    w, v = eigendecompose(np.eye(3))
    assert np.array_equal(w, [1, 1, 1])
    assert np.allclose(v.T @ v, np.eye(3))


def test_eigendecompose_two_by_two():
    w, _ = eigendecompose(np.array([[1.0, -1.0], [-1.0, 1.0]]))
    assert np.allclose(w, [0, 2], atol=1e-15)


def test_eigendecompose_five_cycle_closed_form_and_oracle():
    m = normalized_laplacian(gen.cycle(5))
    w, _ = eigendecompose(m)
    assert np.allclose(w, oracles.cycle_spectrum(5), atol=1e-12)
    assert np.allclose(w, oracles.power_iteration_spectrum(m), atol=1e-6)


@pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 31])
def test_eigendecompose_random_symmetric(n):
    rng = np.random.default_rng(n)
    a = rng.standard_normal((n, n))
    a = a + a.T
    w, v = eigendecompose(a)
    assert np.all(np.diff(w) >= 0)
    assert np.abs(v.T @ v - np.eye(n)).max() < 1e-12
    assert np.abs(a @ v - v * w).max() < 1e-11 * max(1, np.abs(a).max())
    # LAPACK as an extra cross-check
    assert np.allclose(w, np.linalg.eigvalsh(a), atol=1e-11)


def test_eigendecompose_rejects_bad_input():
    with pytest.raises(ValueError):
        eigendecompose(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(MatrixTooLargeError):
        eigendecompose(np.eye(5), max_order=4)


def test_eigendecompose_sweep_limit():
    rng = np.random.default_rng(0)
    a = rng.standard_normal((12, 12))
    with pytest.raises(NoConvergenceError):
        eigendecompose(a + a.T, max_sweeps=1)


def test_complete_four_spectrum():
    s = spectrum(gen.complete(4))
    # 1 + 1/d with d = 3
    assert np.allclose(s.eigenvalues, [0, 4 / 3, 4 / 3, 4 / 3], atol=1e-12)


def test_four_cycle_spectrum():
    assert np.allclose(spectrum(gen.cycle(4)).eigenvalues, [0, 1, 1, 2], atol=1e-12)


@pytest.mark.parametrize("name, g", list(small_corpus().items()))
def test_spectrum_invariants(name, g):
    s = spectrum(g)
    d = g.degree
    n = g.n
    u = s.eigenfunctions
    assert s.eigenvalues[0] == 0.0
    assert np.all(u[:, 0] == 1.0 / np.sqrt(d * n))
    assert s.eigenvalues[1] > 1e-8
    assert s.eigenvalues.min() >= -1e-10 and s.eigenvalues.max() <= 2 + 1e-10
    gram = d * u.T @ u
    assert np.abs(gram - np.eye(n)).max() <= 1e-9
    assert s.max_residual <= 1e-9
    for i in range(n):
        res = apply_laplacian(g, u[:, i]) + s.eigenvalues[i] * u[:, i]
        assert np.abs(res).max() <= 1e-9
    assert abs(s.eigenvalues.sum() - n) <= 1e-9 * n


def test_spectrum_is_immutable():
    s = spectrum(gen.cycle(5))
    with pytest.raises(ValueError):
        s.eigenvalues[0] = 1.0


def test_groups_complete_four():
    groups = group_multiplicities(spectrum(gen.complete(4)))
    assert [(g.multiplicity) for g in groups] == [1, 3]
    assert groups[1].value == pytest.approx(4 / 3, abs=1e-12)


def test_groups_petersen():
    groups = group_multiplicities(spectrum(gen.petersen()))
    expected = oracles.multiset(oracles.petersen_spectrum())
    assert [(round(g.value, 9), g.multiplicity) for g in groups] == sorted(expected.items())
    assert [g.multiplicity for g in groups] == [1, 5, 4]


def test_groups_all_distinct():
    lam = np.array([0.0, 0.3, 0.7, 1.2])
    s = Spectrum(lam, np.eye(4), 1, 0.0)
    groups = group_multiplicities(s)
    assert len(groups) == 4
    assert all(g.multiplicity == 1 for g in groups)


def test_groups_partition_and_spacing():
    s = spectrum(gen.hypercube(4))
    groups = group_multiplicities(s)
    covered = [i for g in groups for i in g.indices]
    assert covered == list(range(16))
    values = [g.value for g in groups]
    assert np.all(np.diff(values) > groups.grouping_tol)


def test_fragile_grouping_warns():
    lam = np.array([0.0, 0.5, 0.5 + 5e-8, 1.0])
    s = Spectrum(lam, np.eye(4), 1, 0.0)
    with pytest.warns(AmbiguousGroupingWarning):
        groups = group_multiplicities(s)
    assert groups.fragile
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert not group_multiplicities(spectrum(gen.petersen())).fragile


def test_mu_pair_petersen():
    mu1, m, mu2 = mu_pair(group_multiplicities(spectrum(gen.petersen())))
    assert (mu1, m, mu2) == (pytest.approx(2 / 3, abs=1e-12), 5, pytest.approx(5 / 3, abs=1e-12))


def test_mu_pair_cube():
    mu1, m, mu2 = mu_pair(group_multiplicities(spectrum(gen.hypercube(3))))
    assert (mu1, m, mu2) == (pytest.approx(2 / 3, abs=1e-12), 3, pytest.approx(4 / 3, abs=1e-12))


def test_mu_pair_complete():
    with pytest.raises(CompleteGraphError):
        mu_pair(group_multiplicities(spectrum(gen.complete(5))))


@pytest.mark.parametrize("name, g", list(small_corpus().items()))
def test_rayleigh_quotient_above_gap(name, g):
    s = spectrum(g)
    rng = np.random.default_rng(11)
    for _ in range(200):
        u = rng.standard_normal(g.n)
        u -= u.mean()
        assert rayleigh_quotient(g, u) >= s.eigenvalues[1] - 1e-9
    # the first nonconstant eigenfunction attains it
    assert rayleigh_quotient(g, s.eigenfunctions[:, 1]) == pytest.approx(s.eigenvalues[1], abs=1e-12)
