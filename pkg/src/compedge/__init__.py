"""Exact computation and exhaustive verification for the degree n-2
squarefree ideals attached to graphs (one generator per edge, supported on
the edge's complement)."""

from .betti import (
    BettiTable,
    PropertyReport,
    betti_positions_check,
    hochster_betti,
    koszul_betti,
    multigraded_koszul_betti,
    ring_properties,
)
from .classify import (
    ClassificationReport,
    ConsistencyResult,
    SweepReport,
    classify_graph,
    gorenstein_census,
    sweep,
    verify_graph,
)
from .complexes import (
    SimplicialComplex,
    facet_complex,
    find_well_ordered_cover,
    gamma_complex,
    induced_subcollection,
    induced_subcomplex,
    is_cone,
    is_well_ordered_facet_cover,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)
from .graphs import (
    Graph,
    complement,
    connected_components,
    emit_graph,
    is_chordal,
    parse_graph,
    triangles,
    validate_standing_assumptions,
)
from .homology import (
    GF2,
    GF3,
    QQ,
    FieldSpec,
    HomologyDims,
    boundary_matrix,
    matrix_rank,
    reduced_homology_dims,
)
from .ideals import (
    MonomialOrderCert,
    SqfIdeal,
    SqfMonomial,
    alexander_dual,
    complementary_edge_ideal,
    degree_component,
    height,
    is_linear_quotient_order,
    is_linearly_related,
    is_unmixed,
    lcm_graph,
    linear_quotient_order,
    minimal_primes,
)

__version__ = "0.1.0"
