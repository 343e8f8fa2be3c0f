"""
Certifying eigenvalue bounds
============================

Each certifier returns a record with both sides, the slack and the
tolerance used. On the Petersen graph the multiplicity ratio bound reads
mu2 / mu1 = 2.5 <= 3m + 1 = 16.
"""

import numpy as np

from symgraph import generators as gen
from symgraph.bounds import (
    check_constancy_3_2,
    check_cor_1_3,
    check_thm_1_1,
    check_thm_1_2,
    check_trial_lemma,
    nontriviality_threshold,
)
from symgraph.spectral import group_multiplicities, spectrum
from symgraph.symmetry import is_arc_transitive

g = gen.petersen()
s = spectrum(g)
groups = group_multiplicities(s)
sym = is_arc_transitive(g)

print(check_cor_1_3(groups, arc_transitive=sym.arc_transitive))

# Weighted gap inequality for every k and every distinct nonzero eigenvalue
worst = min(check_thm_1_1(s, k, grp.value, arc_transitive=True).slack
            for k in range(g.n - 1) for grp in groups.nonzero())
print("smallest slack over all (k, lambda):", worst)

for k in range(g.n - 1):
    rec = check_thm_1_2(s, k, arc_transitive=True)
    print(f"k={k}: lambda_(k+1) = {rec.lhs:.6f} <= {rec.rhs:.6f}")

# Edge sums of squared eigenfunction gradients are constant on symmetric graphs
print(check_constancy_3_2(g, groups[1], groups[1].value, arc_transitive=True))

# The trial-function inequality needs no symmetry; try it on the prism
prism = gen.circulant(6, [2, 3])
h = np.random.default_rng(1).standard_normal(6)
print(check_trial_lemma(prism, spectrum(prism), h, 2))

print("cycles beat the trivial bound from N =", nontriviality_threshold())
