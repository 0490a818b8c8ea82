"""Eigenvalue-sum bounds for symmetric matrices and graph spectra.

Top-k eigenvalue-sum bounds driven by trace statistics and inertia counts,
their specializations to adjacency and Laplacian matrices with equality
characterizations, and an exhaustive small-order verification harness for
the Laplacian eigenvalue-sum conjecture.
"""

from spectra_bounds.backend import BACKEND, COMPILED
from spectra_bounds.bounds_core import (
    BoundInput,
    BoundReport,
    bound_input,
    check_mean_condition,
    inertia_bound,
    inertia_pair_bound,
    mohar_bound,
    nikiforov_pair_bound,
    variance_bound,
    variance_bound_strict,
)
from spectra_bounds.brouwer import (
    BrouwerReport,
    brouwer_slacks,
    cert_boundary_identity,
    cert_coeffs,
    cert_eval,
    de_caen_gap,
    dual_transfer,
    explicit_threshold,
    sufficient_guarantee,
)
from spectra_bounds.graph_bounds import (
    BOUND_IDS,
    GraphBoundReport,
    adj_bound_inertia,
    adj_bound_theta1,
    adj_bound_theta2,
    equality_witness_scan,
    evaluate_bound,
    lap_bound_sigma,
    lap_bound_theta,
    pair_bound_checks,
)
from spectra_bounds.graphs import (
    Graph,
    adjacency,
    complement,
    complement_lap_spectrum,
    count_distinct,
    disjoint_union,
    enumerate_labeled,
    exact_spectrum,
    from_graph6,
    generate,
    is_complete_multipartite,
    join,
    laplacian,
    multipartite_charpoly_factor,
    parse_family,
    q_class_check,
    signless_laplacian,
    to_graph6,
)
from spectra_bounds.linalg import (
    Inertia,
    Spectrum,
    SymMatrix,
    TraceStats,
    build_symmetric,
    eigh,
    inertia,
    top_k_sum,
    trace_stats,
)

__version__ = "0.1.0"
