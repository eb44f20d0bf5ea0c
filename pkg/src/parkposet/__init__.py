"""Exact combinatorics of the parking poset (noncrossing 2-partitions).

The package builds the poset of noncrossing 2-partitions in four
interchangeable representations, verifies its lattice and shellability
structure, reproduces chain counts and homology characters by closed
formulas and brute-force oracles, and extends the picture to k-divisible
variants, the noncrossing alternating forest complex, and the cluster
parking poset.  Everything runs on exact integer and Fraction
arithmetic with no third-party dependencies.
"""

from .enumeration import (
    chain_from_ktree,
    enumerate_parking_words,
    is_prime_parking_word,
    ktree_code,
    ktree_from_chain,
    ktree_from_code,
    parking_character,
    prime_parking_character,
    tree_action,
    word_action,
)
from .forests import (
    boundary_faces,
    build_cluster_poset,
    cluster_action,
    cluster_elements,
    edges_compatible,
    enumerate_forest_faces,
    face_counts_by_size,
    face_poset,
    forest_components,
    is_forest_face,
    spanning_facets,
)
from .homology import (
    count_chains_by_size,
    interval_catalan_weight,
    lefschetz_number,
    parking_betti,
    reduced_betti,
    reduced_euler_characteristic,
    signed_prime_character,
    sparse_rank,
    top_homology_character,
    whitney_module_character,
)
from .kdivisible import (
    build_divisible_nc_poset,
    build_divisible_parking_poset,
    build_nck_poset,
    build_ppk_poset,
    divisible_nc_elements,
    divisible_parking_elements,
    is_prime_chain,
    nck_elements,
    ppk_action,
    ppk_elements,
    relative_complement_chain,
    weak_chains,
)
from .nc import (
    NoncrossingPartition,
    Permutation,
    SetPartition,
    embed_permutation,
    enumerate_noncrossing,
    is_noncrossing,
    kreweras,
    kreweras_inverse,
    nc_leq,
    partition_from_permutation,
    relative_kreweras,
)
from .numbers import (
    binomial,
    catalan,
    chain_count,
    fuss_catalan,
    narayana,
    stirling2,
    whitney_first_kind,
)
from .objects import (
    ParkingElement,
    Tree,
    count_elements,
    enumerate_elements,
    enumerate_trees,
    is_parking_word,
    tree_from_word,
    validate_tree,
    word_from_tree,
)
from .parking_order import (
    build_nc_poset,
    build_pp_poset,
    build_pp_poset_hat,
    descend,
    ideal,
    lower_covers,
    permutahedron_face_poset,
    pp_join,
    pp_leq,
    pp_meet,
    right_comb_subposet,
    upper_covers,
)
from .poset import FinitePoset, posets_isomorphic
from .series import (
    TruncatedSeries,
    chain_inverse_series,
    chain_series,
    series_chain_count,
)
from .shelling import (
    recursive_atom_ordering_failure,
    verify_fork_lemma,
    verify_nc_fork_lemma,
    verify_shelling,
)

__version__ = "0.1.0"

__all__ = [
    "FinitePoset",
    "NoncrossingPartition",
    "ParkingElement",
    "Permutation",
    "SetPartition",
    "Tree",
    "TruncatedSeries",
    "binomial",
    "boundary_faces",
    "build_cluster_poset",
    "build_divisible_nc_poset",
    "build_divisible_parking_poset",
    "build_nc_poset",
    "build_nck_poset",
    "build_pp_poset",
    "build_pp_poset_hat",
    "build_ppk_poset",
    "catalan",
    "chain_count",
    "chain_from_ktree",
    "chain_inverse_series",
    "chain_series",
    "cluster_action",
    "cluster_elements",
    "count_chains_by_size",
    "count_elements",
    "descend",
    "divisible_nc_elements",
    "divisible_parking_elements",
    "edges_compatible",
    "embed_permutation",
    "enumerate_elements",
    "enumerate_forest_faces",
    "enumerate_noncrossing",
    "enumerate_parking_words",
    "enumerate_trees",
    "face_counts_by_size",
    "face_poset",
    "forest_components",
    "fuss_catalan",
    "ideal",
    "interval_catalan_weight",
    "is_forest_face",
    "is_noncrossing",
    "is_parking_word",
    "is_prime_chain",
    "is_prime_parking_word",
    "kreweras",
    "kreweras_inverse",
    "ktree_code",
    "ktree_from_chain",
    "ktree_from_code",
    "lefschetz_number",
    "lower_covers",
    "narayana",
    "nc_leq",
    "nck_elements",
    "parking_betti",
    "parking_character",
    "partition_from_permutation",
    "permutahedron_face_poset",
    "posets_isomorphic",
    "pp_join",
    "pp_leq",
    "pp_meet",
    "ppk_action",
    "ppk_elements",
    "prime_parking_character",
    "recursive_atom_ordering_failure",
    "reduced_betti",
    "reduced_euler_characteristic",
    "relative_complement_chain",
    "relative_kreweras",
    "right_comb_subposet",
    "series_chain_count",
    "signed_prime_character",
    "sparse_rank",
    "spanning_facets",
    "stirling2",
    "top_homology_character",
    "tree_action",
    "tree_from_word",
    "upper_covers",
    "validate_tree",
    "verify_fork_lemma",
    "verify_nc_fork_lemma",
    "verify_shelling",
    "weak_chains",
    "whitney_first_kind",
    "whitney_module_character",
    "word_action",
    "word_from_tree",
]
