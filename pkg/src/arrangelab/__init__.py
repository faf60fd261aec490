"""Nice partitions of graphical hyperplane arrangements.

Library, service and CLI for intersection lattices, characteristic
polynomials, chordality certificates, modular chains, and the constructive
correspondence between nice partitions and maximal modular chains.
"""

__version__ = "0.1.0"

from .arrangement import (
    Arrangement,
    Flat,
    GraphEdgeHyperplane,
    LinearHyperplane,
    closure,
    general_arrangement,
    graphical_arrangement,
    localization,
    parse_normals,
    product_arrangement,
    rank_of_subset,
    to_general,
)
from .factorization import (
    ArrangementPartition,
    NiceCertificate,
    chain_to_partition,
    enumerate_nice_partitions,
    is_independent_partition,
    is_nice,
    localize_partition,
    partition_to_modular_chain,
    star_vertex,
    theorem_suite,
    verify_factorization,
)
from .graphs import (
    ChordlessCycleWitness,
    EliminationOrdering,
    Graph,
    blocks,
    chordality,
    is_simplicial,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    to_graph6,
    topological_order,
)
from .lattice import (
    FlatChain,
    IntersectionLattice,
    build_lattice,
    characteristic_polynomial,
    is_modular_brylawski,
    is_modular_element,
    is_supersolvable,
    join,
    lattice_to_dot,
    lattice_to_json,
    maximal_modular_chains,
    meet,
    product_iso_check,
)
from .oracle import campaign, chromatic_polynomial_dc, naive_modular, naive_rank
from .polynomial import IntPolynomial
