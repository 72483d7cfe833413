"""Exact FP_n decisions for coabelian ideals of right-angled Artin Lie algebras."""

__version__ = "0.1.0"

from .character import (
    Character,
    CharacterSpace,
    dead_cliques,
    living_subgraph,
    parse_character,
    parse_character_space,
    realizable_supports,
    restriction_rank,
)
from .decider import (
    Convention,
    Verdict,
    cross_check_p1_p2,
    fg_corollaryE,
    fp_codim1,
    fp_ideal,
    thmG_sufficient,
)
from .errors import (
    CoabelianError,
    InternalInconsistencyError,
    InvalidArgumentError,
    MalformedInputError,
    ParseError,
    ResourceLimitError,
)
from .exactfield import FieldSpec, Matrix, kernel_basis, rank
from .graph import Graph, enumerate_cliques, is_connected, is_dominant, link_in_graph, parse_graph
from .oracle import build_C, decomposition_check, fp_oracle, graded_H, homology_C
from .scomplex import (
    SimplicialComplex,
    boundary_matrix,
    flag_complex,
    is_acyclic_up_to,
    link,
    order_complex,
    reduced_betti,
)
