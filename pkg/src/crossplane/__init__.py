"""crossplane: combinatorial planarization and low-crossing drawing toolkit."""

from .graph import (
    Edge,
    Graph,
    VertexPair,
    biconnected_components,
    connectivity,
    max_degree,
    subdivide_parallel_edges,
)
from .planarizer import (
    CutResult,
    PlanarizationResult,
    balanced_cut,
    lipton_tarjan_separator,
    planarize,
)
from .planarity import (
    DualGraph,
    NonPlanarVerdict,
    PlanarEmbedding,
    RotationSystem,
    dual,
    embed_multigraph,
    kuratowski_witness,
    test_planarity,
)
from .decomp import (
    BlockDecomposition,
    SpqrTree,
    block_decomposition,
    compute_connectors,
    spqr,
)
from .inserter import (
    Drawing,
    InsertionRoute,
    insert_all,
    insert_edge,
    uncross,
)
from .embedder import (
    BlockClassification,
    IrregularityReport,
    Tunnel,
    classify_blocks,
    count_irregular,
    find_close_embedding,
    find_tunnels,
    flip_tunnels,
)
from .reducer import (
    DegreeReduction,
    degree_reduce,
    degree_restore,
    restore_crossing_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BlockClassification",
    "BlockDecomposition",
    "CutResult",
    "DegreeReduction",
    "Drawing",
    "DualGraph",
    "Edge",
    "Graph",
    "InsertionRoute",
    "IrregularityReport",
    "NonPlanarVerdict",
    "PlanarEmbedding",
    "PlanarizationResult",
    "RotationSystem",
    "SpqrTree",
    "Tunnel",
    "VertexPair",
    "balanced_cut",
    "biconnected_components",
    "block_decomposition",
    "classify_blocks",
    "compute_connectors",
    "connectivity",
    "count_irregular",
    "degree_reduce",
    "degree_restore",
    "dual",
    "embed_multigraph",
    "find_close_embedding",
    "find_tunnels",
    "flip_tunnels",
    "insert_all",
    "insert_edge",
    "kuratowski_witness",
    "lipton_tarjan_separator",
    "max_degree",
    "planarize",
    "restore_crossing_bound",
    "spqr",
    "subdivide_parallel_edges",
    "test_planarity",
    "uncross",
    "__version__",
]
