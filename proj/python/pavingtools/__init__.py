"""Python interface to the sparse paving matroid toolkit."""

from ._core import (
    Matroid,
    PavingError,
    build_mk,
    build_tictactoe,
    build_vamos,
    find_restriction_isomorphic,
    find_vamos,
    flat_counts,
    graph_prism,
    is_pseudomodular_naive,
    is_pseudomodular_pruned,
    parse,
    prism_triples,
    random_sparse_paving,
    serialize,
    validate,
)

__all__ = [
    "Matroid",
    "PavingError",
    "build_mk",
    "build_tictactoe",
    "build_vamos",
    "find_restriction_isomorphic",
    "find_vamos",
    "flat_counts",
    "graph_prism",
    "is_pseudomodular_naive",
    "is_pseudomodular_pruned",
    "parse",
    "prism_triples",
    "random_sparse_paving",
    "serialize",
    "validate",
]
