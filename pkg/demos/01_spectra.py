"""
Spectra of the normalized Laplacian
===================================

Build a few regular graphs, diagonalize -Delta = I - A/d with the in-house
Jacobi solver, and group eigenvalues by multiplicity.
"""

import numpy as np

from symgraph import generators as gen
from symgraph.spectral import group_multiplicities, mu_pair, spectrum

# The Petersen graph: eigenvalues 0, 2/3 (x5), 5/3 (x4)
s = spectrum(gen.petersen())
print("petersen eigenvalues:", np.round(s.eigenvalues, 12))
print("largest eigen-residual:", s.max_residual)

groups = group_multiplicities(s)
for g in groups:
    print(f"  value {g.value:.12f}  multiplicity {g.multiplicity}")

# mu1, its multiplicity, and the next distinct value
print("(mu1, m, mu2) =", mu_pair(groups))

# The cycle spectrum has a closed form, 1 - cos(2 pi j / N)
n = 9
s = spectrum(gen.cycle(n))
closed = np.sort(1 - np.cos(2 * np.pi * np.arange(n) / n))
print("cycle(9) max deviation from closed form:", np.abs(s.eigenvalues - closed).max())

# Eigenfunctions are orthonormal for <u, v> = d * sum(u v)
u = s.eigenfunctions
print("weighted Gram error:", np.abs(s.degree * u.T @ u - np.eye(n)).max())
