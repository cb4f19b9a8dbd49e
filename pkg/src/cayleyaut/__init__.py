"""Automorphism groups of Cayley graphs of S_n generated by transpositions."""

from .autsearch import automorphism_group, brute_force_automorphisms
from .cayley import build_cayley, family_generators, left_regular_embed, mbs_generators, right_regular_embed
from .groups import PermGroup, group_from_generators
from .perm import Perm, compose, conjugate, format_cycles, identity, inverse, parse_cycles, rank, unrank
from .tgraph import TranspositionSet, build_transposition_graph, small_graph_automorphisms
from .verify import DecompositionReport, verify_direct_product, verify_mbs_theorem

__all__ = [
    "Perm", "compose", "conjugate", "format_cycles", "identity", "inverse", "parse_cycles", "rank", "unrank",
    "PermGroup", "group_from_generators",
    "TranspositionSet", "build_transposition_graph", "small_graph_automorphisms",
    "build_cayley", "family_generators", "mbs_generators", "left_regular_embed", "right_regular_embed",
    "automorphism_group", "brute_force_automorphisms",
    "DecompositionReport", "verify_direct_product", "verify_mbs_theorem",
]
