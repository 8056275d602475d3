"""Constructions and classification for S-unit difference graphs G_S(A)."""

from .analyze import Status, Verdict, brute_force_search, census_equivalence_classes, classify
from .diophantine import UnitEquation, bounds, check_nondegenerate, has_exceptional_units, solve_bounded
from .graphcore import Graph, is_isomorphic
from .sintring import PrimeSet, SInteger
from .synthesis import (
    CubeEmbedding,
    cube_from_representation,
    cubical_to_representation,
    hypercube_embed,
    k22_representations,
    represent_any,
    represent_forest,
    rescale_representation,
)
from .unitgraph import Representation, are_equivalent, build_graph, canonicalize

__all__ = [
    "CubeEmbedding",
    "Graph",
    "PrimeSet",
    "Representation",
    "SInteger",
    "Status",
    "UnitEquation",
    "Verdict",
    "are_equivalent",
    "bounds",
    "brute_force_search",
    "build_graph",
    "canonicalize",
    "census_equivalence_classes",
    "check_nondegenerate",
    "classify",
    "cube_from_representation",
    "cubical_to_representation",
    "has_exceptional_units",
    "hypercube_embed",
    "is_isomorphic",
    "k22_representations",
    "represent_any",
    "represent_forest",
    "rescale_representation",
    "solve_bounded",
]
