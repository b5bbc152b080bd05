"""Exact perfect-matching counting for planar/pfaffian graphs via Kasteleyn
orientations and big-integer skew determinants, plus the catalogue of
determinant upper bounds and the capped-ring fullerene families."""

from .bounds import (
    BoundEntry,
    BoundReport,
    bregman_bound,
    compare_all,
    fullerene_hamiltonian_cases,
    girth_bound,
    hadamard_bound,
    hf_block_bound,
    hf_square_bound,
    pentacap_lower_bound,
    regular_sharpness,
    ring_refined_bound,
    semicircular_closed_form,
)
from .circulants import (
    RingBlock,
    cycle_skew,
    gauge_reduce,
    lucas_det,
    lucas_number,
    matching_poly_identity_check,
    ring_block_det,
    sequence_monotonicity_check,
)
from .decomposition import CircularDecomposition, detect_semicircular, validate_decomposition
from .embedding import (
    PlanarEmbedding,
    build_embedding,
    check_edge_bound,
    embed_from_coordinates,
    embedding_girth,
    leapfrog,
)
from .errors import (
    BoundViolationError,
    ConsistencyError,
    EmbeddingError,
    OracleSizeError,
    ParameterError,
)
from .fullerenes import (
    GeneratedFullerene,
    capped_rings,
    extend_cap,
    hexacap,
    leapfrog_ring_profile,
    pentacap,
    validate_fullerene,
)
from .graphs import (
    Graph,
    WeightedGraph,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    dodecahedron,
    girth,
    has_short_cycles,
    make_classic,
    octahedron,
    path_graph,
    square_graph,
    uniform_weights,
)
from .matchings import (
    Matching,
    cycle_matching_polynomial,
    enumerate_perfect_matchings,
    greedy_maximal_matching,
    hafnian,
    matching_from_path,
    matching_polynomial,
    path_matching_polynomial,
)
from .pfaffian import (
    Orientation,
    count_by_pfaffian,
    count_from_orientation,
    exact_determinant,
    gram_matrix,
    kasteleyn_orient,
    skew_matrix,
    verify_det_bound,
)

__version__ = "0.1.0"
