"""Balanced bipartite graphs: checkers, constructions, and enumerations."""

from .graphs import (
    Graph,
    GraphError,
    DisconnectedError,
    NotCubicError,
    Bipartition,
    OddClosedWalk,
    TwinPartition,
    from_edges,
    bipartition,
    is_bipartite,
    is_connected,
    induced_subgraph,
    delete_vertex,
    delete_edge,
    add_edge,
    twin_classes,
    twin_quotient,
    girth,
    vertex_connectivity,
    two_cuts,
    max_vertices,
)
from .canon import (
    CanonicalForm,
    canonical_form,
    canonical_labeling,
    is_isomorphic,
    automorphism_generators,
    vertex_orbits,
    is_vertex_transitive,
)
from .graph6 import to_graph6, from_graph6, read_graph6_lines, write_graph6_lines
from .balance import (
    InducedCycle,
    BalanceReport,
    enumerate_induced_cycles,
    is_balanced,
    balance_report,
    is_balanced_after_twin_collapse,
    bipartite_adjacency_matrix,
    matrix_is_balanced_oracle,
)
from .matrices import MatrixError, ZeroOneMatrix
from .groups import (
    AbelianGroup,
    GroupError,
    abelian_groups_of_order,
    cyclic_group,
    parse_group_spec,
)
from .cayley import (
    ConnectionSetError,
    LtSpec,
    CayleyClassificationReport,
    CirculantReport,
    cayley_graph,
    check_connection_set,
    circulant,
    classify_cayley_graph,
    enumerate_connection_sets,
    lex_product_with_empty,
    lt_cycle,
    recognize_lt_cycle,
    verify_cayley_classification,
    verify_circulant_structure,
)
from .cover import (
    CoverError,
    ExactCoverSolution,
    DivisibilityReport,
    exact_cover,
    verify_divisibility,
)
from .census import (
    CensusError,
    CensusTask,
    CensusReport,
    TwinConjectureReport,
    ConsequenceReport,
    enumerate_cubic_bipartite,
    count_balanced_cubic,
    check_conjecture_twins,
    check_conjecture_consequences,
)
from .planar import (
    EmbeddedGraph,
    FaceWalk,
    SvSubgraph,
    SvReport,
    TwoCutDecomposition,
    cube_seed,
    diamond_inflation,
    a1_subdivision,
    faces,
    batagelj_enumerate,
    s_v_subgraph,
    verify_sv_claims,
    planarity_test,
    two_cut_decompose,
    embedding_to_text,
    embedding_from_text,
)

__version__ = "0.1.0"
