"""strongdim: exact strong metric dimension of graphs and strong products.

Core pipeline: build the strong resolving graph (edges = mutually maximally
distant pairs), solve its minimum vertex cover exactly, and read the strong
metric dimension off the cover.  A claim-verification harness checks the
structural laws that make the pipeline work on reproducible corpora.
"""

from .cover import (
    BudgetExhausted,
    CliquePartition,
    CoverResult,
    clique_cover_number,
    independence_number,
    is_c1_graph,
    is_c_graph,
    max_clique,
    max_independent_set,
    min_vertex_cover,
)
from .dimension import (
    DimensionResult,
    brute_force_dimension,
    formula,
    is_strong_generator,
    strong_metric_dimension,
    strongly_resolves,
)
from .graph import (
    Graph,
    complement,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    from_graph6,
    generalized_tree,
    generate,
    graphs_isomorphic,
    grid,
    make_graph,
    path,
    random_connected,
    star,
    to_dot,
    to_graph6,
)
from .metrics import (
    DistanceMatrix,
    all_pairs_distances,
    blocks,
    cut_vertices,
    diameter,
    is_connected,
    is_generalized_tree,
    is_two_antipodal,
    leaf_count,
)
from .products import PRODUCT_KINDS, ProductSpec, product, project
from .resolving import (
    PredictedSR,
    SRGraph,
    boundary,
    is_maximally_distant,
    mutually_maximally_distant,
    predicted_mmd_edges,
    strong_resolving_graph,
)
from .verify import (
    ClaimReport,
    Corpus,
    CorpusSpec,
    claim_ids,
    replay_instance,
    run_suite,
    verify_claim,
)

__version__ = "0.1.0"
