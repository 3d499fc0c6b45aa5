"""Spectral radii, clique numbers and Lagrangians of general hypergraphs.

A general hypergraph may mix edge sizes; its adjacency tensor has order
equal to the largest edge size (the rank). All tensor work is implicit,
through per-edge polynomials, so nothing of size n^k is ever built
outside the dense test oracle.
"""

from .bounds import (
    BoundOptions,
    BoundRecord,
    BoundReport,
    ClosedFormCondition,
    adjacency_clique_bound,
    check_all,
    closed_form_condition,
    eigenvector_sum_bound,
    rank_corank_bound,
    rank_corank_bound_simplified,
    signless_clique_bound,
)
from .clique import CliqueResult, greedy_clique, is_clique, max_clique_exact
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    ParseError,
    complete_r_graph,
    connected_components,
    disjoint_union,
    edge_type_multiset,
    parse_hypergraph,
    random_r_graph,
    read_hypergraph,
    serialize_hypergraph,
    write_hypergraph,
)
from .lagrangian import (
    LagrangianOptions,
    LagrangianResult,
    clique_support_value,
    lagrangian_value,
    maximize_lagrangian,
    project_to_simplex,
)
from .spectral import (
    ConvergenceError,
    IterationOptions,
    SpectralResult,
    principal_entry_sum,
    signless_spectral_radius,
    spectral_radius,
)
from .tensor import (
    OracleSizeError,
    TensorDomainError,
    adjacency_apply,
    alpha,
    dense_tensor_oracle,
    rayleigh_adjacency,
    rayleigh_signless,
    signless_apply,
)

__version__ = "0.1.0"
