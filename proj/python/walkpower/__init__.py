"""Walk-powers of graphs, signed graphs, projective cubes, and homomorphisms.

Thin package over the compiled ``_core`` extension; every public name is
re-exported here.
"""

from ._core import (
    Graph,
    PowerPreconditionError,
    SignedGraph,
    VerificationError,
    all_negative,
    all_positive,
    bipartition,
    classify_consistency,
    clique_size_formula,
    cycle_sign,
    degree_gadget,
    find_graph_hom,
    find_signed_hom,
    find_spc_hom,
    is_clique,
    max_clique,
    min_degree,
    odd_construction,
    odd_girth,
    packing_to_spc,
    projective_cube,
    read_sg_file,
    read_sg_text,
    refined_odd_power,
    shortest_odd_cycle,
    shortest_unbalanced_cycle,
    signatures_equivalent,
    signed_bipartite_power,
    signed_construction,
    signed_projective_cube,
    subdivided_k4,
    switched,
    to_dot,
    unbalanced_girth,
    verify_hom,
    walk_power,
    write_sg,
    write_sg_file,
)

__version__ = "1.0.0"

__all__ = [
    "Graph",
    "PowerPreconditionError",
    "SignedGraph",
    "VerificationError",
    "all_negative",
    "all_positive",
    "bipartition",
    "classify_consistency",
    "clique_size_formula",
    "cycle_sign",
    "degree_gadget",
    "find_graph_hom",
    "find_signed_hom",
    "find_spc_hom",
    "is_clique",
    "max_clique",
    "min_degree",
    "odd_construction",
    "odd_girth",
    "packing_to_spc",
    "projective_cube",
    "read_sg_file",
    "read_sg_text",
    "refined_odd_power",
    "shortest_odd_cycle",
    "shortest_unbalanced_cycle",
    "signatures_equivalent",
    "signed_bipartite_power",
    "signed_construction",
    "signed_projective_cube",
    "subdivided_k4",
    "switched",
    "to_dot",
    "unbalanced_girth",
    "verify_hom",
    "walk_power",
    "write_sg",
    "write_sg_file",
]
