"""Maximum clique toolkit for large sparse graphs."""

__version__ = "0.1.0"

from .community import (
    CommunitySet,
    Cover,
    OverlapMatrix,
    collect_cliques,
    cpm_oracle,
    k_clique_communities,
    maximal_clique_containing,
    omega_index,
    overlap_matrix,
    threshold_components,
)
from .exact import CliqueResult, Incumbent, PruningStats, clique_extend, max_clique
from .graph import (
    CsrGraph,
    GraphInputError,
    build_csr,
    generate_hamming,
    generate_johnson,
    parse_dimacs,
    parse_edge_list,
    to_dimacs,
    to_edge_list,
)
from .heuristic import SelectionPolicy, max_clique_heuristic
from .oracle import OracleLimitError, brute_force_max_clique, enumerate_maximal_cliques
from .parallel import ConfigError, ParallelConfig, max_clique_parallel
from .rmat import RmatParams, rmat_generate

__all__ = [
    "CliqueResult",
    "CommunitySet",
    "ConfigError",
    "Cover",
    "CsrGraph",
    "GraphInputError",
    "Incumbent",
    "OracleLimitError",
    "OverlapMatrix",
    "ParallelConfig",
    "PruningStats",
    "RmatParams",
    "SelectionPolicy",
    "brute_force_max_clique",
    "build_csr",
    "clique_extend",
    "collect_cliques",
    "cpm_oracle",
    "enumerate_maximal_cliques",
    "generate_hamming",
    "generate_johnson",
    "k_clique_communities",
    "max_clique",
    "max_clique_heuristic",
    "max_clique_parallel",
    "maximal_clique_containing",
    "omega_index",
    "overlap_matrix",
    "parse_dimacs",
    "parse_edge_list",
    "rmat_generate",
    "threshold_components",
    "to_dimacs",
    "to_edge_list",
]
