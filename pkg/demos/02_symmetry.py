"""
Automorphisms and arc-transitivity
==================================

The eigenvalue bounds need a symmetric (arc-transitive) graph. Here the
backtracking search classifies a few graphs, including the triangular
prism, which is vertex-transitive but not arc-transitive.
"""

from symgraph import generators as gen
from symgraph.symmetry import find_automorphism, is_arc_transitive, iter_automorphisms

petersen = gen.petersen()
print("petersen automorphisms:", sum(1 for _ in iter_automorphisms(petersen)))

# An automorphism sending vertex 0 to 7 and its neighbour 1 to 2
gamma = find_automorphism(petersen, [(0, 7), (1, 2)])
print("gamma:", gamma)

for name, g in [("cycle:12", gen.cycle(12)), ("hypercube:4", gen.hypercube(4)),
                ("prism", gen.circulant(6, [2, 3]))]:
    rep = is_arc_transitive(g)
    print(f"{name:12s} vertex-transitive={rep.vertex_transitive} "
          f"arc-transitive={rep.arc_transitive} nodes={rep.search_nodes} witness={rep.witness}")
