"""Every extremal witness, built and re-checked by the recognizers.

Each family bound comes with a construction attaining it: stars for trees,
an apex over star copies for partial 2-trees, a labeled K_{2,p^2} for the
triangle-free case, converted degree-diameter graphs for bounded degree,
and a subdivided wheel for planar girth 5.

    python demos/03_extremal_constructions.py
"""

from mngraph import (
    build_from_diameter2,
    build_girth5_planar_six,
    build_partial2tree_extremal,
    build_star,
    build_trianglefree_extremal,
    build_vizing_edge_coloring,
    cycle_graph,
    family_profile,
    is_absolute_clique,
    is_proper_edge_coloring,
    petersen_graph,
    relative_clique_number,
)

for m, n in [(1, 0), (0, 2), (1, 1), (2, 0)]:
    p = 2 * m + n
    star = build_star(m, n)
    tree2 = build_partial2tree_extremal(m, n)
    tfree = build_trianglefree_extremal(m, n)
    print(
        f"(m,n)=({m},{n})  p={p}:  star order {star.vertex_count} (=p+1), "
        f"partial-2-tree witness {tree2.vertex_count} (=p^2+p+1), "
        f"triangle-free witness {tfree.vertex_count} (=p^2+2)"
    )
    assert all(map(is_absolute_clique, (star, tree2, tfree)))

# The degree-diameter route: any diameter-2 graph with Delta < 2m+n turns
# into an absolute clique by orienting pairs of edge-color classes.
coloring = build_vizing_edge_coloring(petersen_graph())
assert is_proper_edge_coloring(petersen_graph(), coloring)
print("\nPetersen proper edge coloring uses", coloring.color_count(), "colors")

converted = build_from_diameter2(petersen_graph(), 2, 0)
print("Petersen as a (2,0)-absolute clique:", is_absolute_clique(converted))

# Planar girth-5 witness: a labeled 5-cycle, an apex, and five special
# 2-paths; six vertices pairwise see each other.
witness = build_girth5_planar_six(1, 1)
profile = family_profile(witness.underlying())
print("\ngirth-5 planar witness profile:")
for line in profile.lines():
    print(" ", line)
print("  omega_r =", relative_clique_number(witness).value, "(= max(2m+n+1, 6))")
