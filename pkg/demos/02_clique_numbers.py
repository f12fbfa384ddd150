"""Relative cliques, absolute cliques, and the chromatic number.

A relative clique is a vertex set whose members can never be merged by any
homomorphism; equivalently, a pairwise-seeing set, so its maximum size is
the clique number of the seeing graph.  An absolute clique additionally
requires the special 2-paths to stay inside the set.  Both sit below the
chromatic number:  omega_a <= omega_r <= chi.

    python demos/02_clique_numbers.py
"""

from mngraph import (
    absolute_clique_number,
    build_c5_02,
    build_petersen_11,
    chromatic_number,
    is_absolute_clique,
    relative_clique_number,
)

# The labeled 5-cycle that separates the two clique notions: vertices
# 0..4, edges 01, 23, 40 of type 1 and 12, 34 of type 2.
c5 = build_c5_02()
rel = relative_clique_number(c5)
abs_ = absolute_clique_number(c5)
chi, blocks = chromatic_number(c5)

print("labeled 5-cycle:")
print("  omega_r =", rel.value, "witness", rel.witness)
print("  omega_a =", abs_.value, "witness", abs_.witness)
print("  chi     =", chi, "via quotient blocks", blocks)

# {0,1,2,3} is a relative clique: 0 and 3 see each other through vertex 4,
# which is OUTSIDE the set.  That is exactly why it is not an absolute
# clique: inside the induced subgraph the midpoint is gone.
assert rel.value == 4 and abs_.value == 3 and chi == 4

# A 10-vertex graph where every pair sees every other pair: the oriented
# Petersen fixture.  Its chromatic number equals its order.
petersen = build_petersen_11()
print("\nPetersen fixture:")
print("  is_absolute_clique =", is_absolute_clique(petersen))
print("  chi =", chromatic_number(petersen)[0], "on", petersen.vertex_count, "vertices")
