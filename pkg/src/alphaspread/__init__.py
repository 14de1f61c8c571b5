"""A_alpha spectra of graphs and the generalized spread lambda_max(A_alpha) - beta*lambda_min(A_gamma)."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    check_lambda_n_delta,
    check_maximizer_inequalities,
    check_psd,
    hsf_upper_bound,
)
from .enumeration import canonical_form, canonical_key, enumerate_connected, enumerate_graphs, is_isomorphic
from .graph import (
    Graph,
    complete,
    is_connected,
    join_clique_independent,
    kite,
    make_graph,
    path,
    star,
    toggle_edge,
)
from .graph6 import graph6_decode, graph6_encode, read_graph6_file
from .search import (
    PartitionDiagnostics,
    ToggleContext,
    VerifyReport,
    adjacency_spread_crosscheck,
    exhaustive_verify,
    hill_climb,
    local_search,
    partition_diagnostics,
    toggle_context,
    toggle_gain,
)
from .spectra import (
    ConvergenceError,
    ObjectiveParams,
    SpectralResult,
    a_alpha_matrix,
    eig_sym,
    eigen_residual,
    lambda_extremes,
    objective,
    quadratic_form,
    quadratic_form_alt,
    spread,
)
