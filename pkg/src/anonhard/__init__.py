"""Suppression-based anonymity cost model and vertex-cover reductions.

The package provides:

* ``core`` -- rows, instances, cluster costs, feasibility;
* ``graphs`` -- cubic graphs, exact and greedy vertex cover, built-ins;
* ``reduction3abp`` -- the binary-alphabet k=3 construction;
* ``reduction4ap8`` -- the width-8 k=4 construction;
* ``solver`` -- exact and greedy anonymity solvers for small tables;
* ``io`` -- row CSV, clustering JSON, provenance/layout files;
* ``cli`` -- the ``anonhard`` command.
"""

from .core import (
    Instance,
    bit,
    cluster_cost,
    cluster_lower_bound,
    clustering_cost,
    hamming,
    is_feasible,
    normalize_cluster_sizes,
    suppressed_columns,
)
from .graphs import (
    BUILTIN_GRAPHS,
    CubicGraph,
    VertexCover,
    builtin,
    exact_vertex_cover,
    greedy_vertex_cover,
)
from .reduction3abp import (
    build_3abp_instance,
    canonicalize_3abp,
    is_canonical_3abp,
    solution_to_vc_3abp,
    vc_to_solution_3abp,
    verify_distance_catalog,
)
from .reduction4ap8 import (
    build_4ap8_instance,
    canonicalize_4ap8,
    is_canonical_4ap8,
    solution_to_vc_4ap8,
    vc_to_solution_4ap8,
    verify_locality,
)
from .solver import (
    exact_kap,
    exact_kap_unrestricted,
    greedy_kap,
    random_feasible_clustering,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_GRAPHS",
    "CubicGraph",
    "Instance",
    "VertexCover",
    "bit",
    "build_3abp_instance",
    "build_4ap8_instance",
    "builtin",
    "canonicalize_3abp",
    "canonicalize_4ap8",
    "cluster_cost",
    "cluster_lower_bound",
    "clustering_cost",
    "exact_kap",
    "exact_kap_unrestricted",
    "exact_vertex_cover",
    "greedy_kap",
    "greedy_vertex_cover",
    "hamming",
    "is_canonical_3abp",
    "is_canonical_4ap8",
    "is_feasible",
    "normalize_cluster_sizes",
    "random_feasible_clustering",
    "solution_to_vc_3abp",
    "solution_to_vc_4ap8",
    "suppressed_columns",
    "vc_to_solution_3abp",
    "vc_to_solution_4ap8",
    "verify_distance_catalog",
    "verify_locality",
]
