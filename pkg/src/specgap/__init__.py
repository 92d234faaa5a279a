"""specgap: spectral radii of graph matrices and verification of spectral-gap
bounds for maximal subgraphs of regular graphs.

For a connected Delta-regular graph G, q(G) = 2*Delta is the signless
Laplacian spectral radius ceiling; deleting any edge opens a strictly
positive gap 2*Delta - q(G - e) that admits closed-form lower bounds in the
order, diameter and vertex connectivity of G.  This package computes the
spectral quantities (power iteration with a dense Jacobi oracle), evaluates
the bounds, and machine-checks the inequalities over graph families.
"""

from ._backend import backend_name
from .bounds import (
    BoundReport,
    Thresholds,
    bound_eq1,
    bound_eq2,
    bound_report,
    bound_thm1,
    bound_thm2,
    cycle_case_bound,
    lemma1_gap,
    thresholds,
)
from .connectivity import (
    disjoint_paths,
    is_k_connected,
    max_vertex_disjoint_paths,
    vertex_connectivity,
)
from .families import (
    FAMILY_KINDS,
    FamilyError,
    FamilySpec,
    cubic_graphs,
    diameter2_cubic_candidates,
    generate,
    isomorphic,
    maximal_subgraphs,
    parse_family_spec,
)
from .graphs import (
    BoundContext,
    DisconnectedGraphError,
    Graph,
    GraphError,
    bfs_distances,
    bound_context,
    build_graph,
    connected_components,
    delete_edge,
    diameter,
    edgelist_dumps,
    edgelist_loads,
    graph6_dumps,
    graph6_loads,
    induced_subgraph,
    is_bipartite,
    is_connected,
)
from .spectral import (
    DEFAULT_TOL,
    NumericalError,
    SpectralResult,
    adjacency,
    dense_spectrum_oracle,
    laplacian,
    largest_eigenvalue,
    mu_max,
    perron_vector,
    q_max,
    rho_max,
    signless_laplacian,
)
from .verifier import (
    CSV_HEADER,
    CampaignSummary,
    TableRow,
    VerificationRecord,
    campaign,
    default_campaign_specs,
    reference_table,
    render_csv,
    render_json,
    render_markdown,
    render_table,
    verify_graph,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    # graphs
    "Graph",
    "GraphError",
    "DisconnectedGraphError",
    "BoundContext",
    "build_graph",
    "delete_edge",
    "induced_subgraph",
    "bfs_distances",
    "connected_components",
    "is_connected",
    "is_bipartite",
    "diameter",
    "bound_context",
    "graph6_dumps",
    "graph6_loads",
    "edgelist_dumps",
    "edgelist_loads",
    # spectral
    "DEFAULT_TOL",
    "NumericalError",
    "SpectralResult",
    "adjacency",
    "laplacian",
    "signless_laplacian",
    "largest_eigenvalue",
    "dense_spectrum_oracle",
    "q_max",
    "mu_max",
    "rho_max",
    "perron_vector",
    # connectivity
    "max_vertex_disjoint_paths",
    "disjoint_paths",
    "vertex_connectivity",
    "is_k_connected",
    # bounds
    "BoundReport",
    "Thresholds",
    "bound_thm1",
    "bound_thm2",
    "bound_eq1",
    "bound_eq2",
    "bound_report",
    "thresholds",
    "cycle_case_bound",
    "lemma1_gap",
    # families
    "FAMILY_KINDS",
    "FamilyError",
    "FamilySpec",
    "parse_family_spec",
    "generate",
    "maximal_subgraphs",
    "isomorphic",
    "cubic_graphs",
    "diameter2_cubic_candidates",
    # verifier
    "CSV_HEADER",
    "VerificationRecord",
    "CampaignSummary",
    "TableRow",
    "verify_graph",
    "campaign",
    "default_campaign_specs",
    "reference_table",
    "render_csv",
    "render_markdown",
    "render_json",
    "render_table",
]
