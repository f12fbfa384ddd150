"""Exact analysis toolkit for (m,n)-colored mixed graphs.

Computes relative and absolute clique numbers and chromatic numbers at
desk scale, generates the extremal constructions for bounded-degree,
subcubic, partial-2-tree and planar families, and verifies the
corresponding bounds by property checks and exhaustive search on small
instances.
"""

from .core import (
    CapacityError,
    InputError,
    Labeling,
    MixedGraph,
    ParseError,
    UnderlyingGraph,
    canonical_types,
    parse,
    serialize,
    serialize_underlying,
)
from .seeing import (
    SeeingGraph,
    is_special_two_path,
    mergeable_oracle,
    seeing_graph,
    sees,
)
from .solvers import (
    CliqueResult,
    SearchOutcome,
    absolute_clique_number,
    chromatic_number,
    is_absolute_clique,
    labeling_search,
    relative_clique_number,
)
from .recognizers import (
    FamilyProfile,
    degeneracy,
    degeneracy_ordering,
    diameter,
    family_profile,
    girth,
    is_partial_2_tree,
    is_planar,
    max_degree,
)
from .constructions import (
    EdgeColoring,
    admits_proper_edge_coloring,
    build_c5_02,
    build_from_diameter2,
    build_girth5_planar_six,
    build_partial2tree_extremal,
    build_petersen_11,
    build_star,
    build_trianglefree_extremal,
    build_vizing_edge_coloring,
    build_wagner_02,
    is_proper_edge_coloring,
)
from .generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
    wagner_graph,
)

__version__ = "0.1.0"
