"""Exact circular coloring of signed graphs.

Core objects: signed multigraphs with switching (``core``), signed
circular cliques (``clique``), a complete homomorphism solver and exact
chi_c search (``solver``), list-coloring lemma verifiers (``lists``),
named graphs and constructions (``catalog``), criticality and density
checks (``criticality``), and enumeration campaigns (``campaigns``).
"""

from .clique import CliqueParams, adjacency, antipode, hat_clique, neighbor_set
from .core import (
    NEG,
    POS,
    GraphError,
    SignedMultigraph,
    canonical_signature,
    contains_switching_subgraph,
    cycle_sign,
    is_switching_equivalent,
    is_switching_isomorphic,
    make_graph,
    parse_graph_text,
    format_graph_text,
    switch,
)
from .criticality import density_check, is_critical, critical_subgraph, potential
from .solver import (
    ChiCResult,
    Homomorphism,
    NegativeLoopError,
    chi_c,
    enumerate_homs,
    find_sp_hom,
    is_colorable,
    verify_hom,
)

__version__ = "0.1.0"

__all__ = [
    "CliqueParams",
    "ChiCResult",
    "GraphError",
    "Homomorphism",
    "NegativeLoopError",
    "NEG",
    "POS",
    "SignedMultigraph",
    "adjacency",
    "antipode",
    "canonical_signature",
    "chi_c",
    "contains_switching_subgraph",
    "critical_subgraph",
    "cycle_sign",
    "density_check",
    "enumerate_homs",
    "find_sp_hom",
    "format_graph_text",
    "hat_clique",
    "is_colorable",
    "is_critical",
    "is_switching_equivalent",
    "is_switching_isomorphic",
    "make_graph",
    "neighbor_set",
    "parse_graph_text",
    "potential",
    "switch",
    "verify_hom",
]
