"""Homomorphisms into the oriented cycles AC_n, with certificates."""

from ._core import (
    ContractError,
    Digraph,
    Graph,
    GuardError,
    ValidationError,
    check_duality_pair,
    complete_graph,
    core,
    cycle,
    cycle_colourable,
    decide_ac,
    exists_hom,
    family,
    images,
    isomorphic,
    oriented_graphs,
    parse_digraph,
    tree_dual,
    verify_certificate,
)

__all__ = [
    "ContractError",
    "Digraph",
    "Graph",
    "GuardError",
    "ValidationError",
    "check_duality_pair",
    "complete_graph",
    "core",
    "cycle",
    "cycle_colourable",
    "decide_ac",
    "exists_hom",
    "family",
    "images",
    "isomorphic",
    "oriented_graphs",
    "parse_digraph",
    "tree_dual",
    "verify_certificate",
]
