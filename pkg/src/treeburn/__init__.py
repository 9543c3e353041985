"""treeburn: graph burning simulation, exact solving, and constructive
burning-sequence certificates for trees."""

__version__ = "0.1.0"

from .bounds import (  # noqa: F401
    BoundTable,
    bound_table,
    ceil_sqrt,
    conjecture_guaranteed,
    floor_sqrt,
    margin,
    refined_bound,
)
from .engine import (  # noqa: F401
    EMPTY,
    BurningSequence,
    RoundLabeling,
    Schedule,
    canonicalize,
    greedy_schedule,
    simulate,
    validate_sequence,
)
from .exact import (  # noqa: F401
    ExactResult,
    burnable_within,
    burning_number,
    burning_number_naive,
    spanning_tree_min,
)
from .graphs import (  # noqa: F401
    Component,
    Forest,
    Graph,
    Tree,
    as_tree,
    augment_degree2,
    bfs_distances,
    build_graph,
    component_size_beyond,
    component_vertices_beyond,
    degree2_census,
    gen_cycle,
    gen_double_star,
    gen_full_binary,
    gen_path,
    gen_random_no_deg2,
    gen_random_tree,
    induced_subtree,
    labeled_trees,
    prufer_decode,
    prufer_encode,
    split_at_degree2,
)
from .construct import (  # noqa: F401
    BoundCertificate,
    SeparatorCert,
    SmoothResult,
    construct_general,
    construct_no_deg2,
    find_separator,
    lift_sequence,
    project_to_subtree,
    smooth,
)
