"""Planar map coloring toolkit.

Maps live as dual graphs (faces as nodes, shared borders as links),
surfaces as rotation-system embeddings. On top: Euler consistency checks,
a planarity decision with Kuratowski subdivision witnesses, greedy color
extension with chronological backtracking, an exact chromatic oracle,
precoloring extension, instance generators, voxel-complex maps, and a
claim registry that grades each bundled proposition as Verified,
Falsified, or HoldsOnCorpus.
"""

from .claims import (
    CLAIM_IDS,
    EXPECTED_VERDICTS,
    ClaimStatus,
    HarnessConfig,
    run_all,
    run_claim,
)
from .coloring import (
    ChromaticResult,
    ExtensionOutcome,
    breadth_first_order,
    check_precoloring_extension,
    exact_chromatic,
    greedy_extend,
    induction_color,
    verify_coloring,
)
from .core import Coloring, MapGraph, build_map, color_name
from .embedding import (
    PlanarEmbedding,
    build_embedding,
    count_vef,
    dual_map,
    embedding_from_faces,
)
from .generators import (
    AugmentedEmbedding,
    Figure1Fixture,
    add_edge_mn,
    base_map_5,
    build_figure1,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    flower_counterexample,
    random_planar_map,
)
from .hyperdim import (
    ConjectureReport,
    VoxelComplex,
    adjacency_graph,
    check_conjecture,
    curve_map,
    neighborly_boxes,
)
from .planarity import (
    EulerReport,
    FiveFaceReport,
    KuratowskiWitness,
    edge_bound_filter,
    euler_check,
    find_kuratowski,
    is_planar,
    verify_five_face_colorability,
)

__version__ = "0.1.0"

__all__ = [
    "MapGraph",
    "Coloring",
    "build_map",
    "color_name",
    "PlanarEmbedding",
    "build_embedding",
    "embedding_from_faces",
    "count_vef",
    "dual_map",
    "EulerReport",
    "KuratowskiWitness",
    "FiveFaceReport",
    "euler_check",
    "edge_bound_filter",
    "is_planar",
    "find_kuratowski",
    "verify_five_face_colorability",
    "ExtensionOutcome",
    "ChromaticResult",
    "verify_coloring",
    "greedy_extend",
    "breadth_first_order",
    "induction_color",
    "exact_chromatic",
    "check_precoloring_extension",
    "Figure1Fixture",
    "AugmentedEmbedding",
    "build_figure1",
    "add_edge_mn",
    "base_map_5",
    "complete_graph",
    "complete_bipartite",
    "complete_multipartite",
    "random_planar_map",
    "flower_counterexample",
    "VoxelComplex",
    "ConjectureReport",
    "curve_map",
    "neighborly_boxes",
    "adjacency_graph",
    "check_conjecture",
    "CLAIM_IDS",
    "EXPECTED_VERDICTS",
    "HarnessConfig",
    "ClaimStatus",
    "run_claim",
    "run_all",
]
