"""Exact (co)homology of Lie algebras built from finite posets.

The pipeline: build a poset (`poset`), form the matrix Lie algebra its
relation carves out of gl_n (`liealg`), assemble the wedge complex and its
weight-block decomposition (`chevalley`), and compute integral or modular
homology via exact Smith normal forms (`homology`).  On top of that sit a
discrete Morse reduction kernel (`morse`), closed-form Hilbert-Poincare
series for the named families (`families`), edge-subset combinatorics for
height-1 posets (`subgraphs`), and cup-product tables (`cup`).
"""

from .poset import (
    Poset, CycleError, from_pairs, from_hasse, parse_text, parse_json, load,
    chain, antichain, cycle_poset, complete_bipartite, fork, umbrella,
    diamond, family, FAMILIES, all_posets, connected_posets,
)
from .liealg import PosetLieAlgebra, REFLEXIVE, STRICT, transpose_map
from .chevalley import (
    GradedComplex, SizeError, ConvexityError, build_complex, boundary,
    boundary_mask, wedge_mask, mask_wedge, weight_vector, weight_blocks,
    block_decompose, gcd_prune, masks_with_weight, p_complex,
    p_complex_nonempty, convex_summand, mask_budget,
)
from .homology import (
    SmithForm, smith_normal_form, HomologyGroup, HomologyTable,
    homology_over_Z, homology_over_field, poset_homology_Z,
    poset_homology_field, cohomology_over_Z, cohomology_table,
    verify_poincare_duality, universal_coefficients_ok, nil_algebra,
    verify_nil_recursion, torsion_scan, nil_summand_check,
    reflexive_field_dims_factored,
)
from .morse import (
    MorseMatching, ReducedComplex, matching_problems, verify_matching,
    reduce_complex, greedy_matching, interval_matching, nil_matching,
    diamond_matching,
)
from .families import (
    HPSeries, filter_every_pth, hp_reflexive_char0, hp_cycle_Z2, hp_cycle_Zp,
    hp_complete_bipartite_pnp, hp_complete_bipartite_Z2_stanley,
    hp_complete_bipartite_Z2_konvalinka, hp_fork_Z2, hp_fork_Zp,
    hp_umbrella_Z2, hp_diamond_Z2, hp_diamond_Z3, subset_incidence_rank_Z3,
    subset_incidence_matrix, incidence_rank_series, hp_tree_height1,
    hp_bipartite_Z2_small_m,
)
from .subgraphs import (
    HeightError, EdgeSubset, iter_p_plus_regular, enumerate_p_plus_regular,
    count_eulerian_by_size, enumerate_even_matrices,
    full_nondiagonal_torsion_witness, counts_csv,
)
from .cup import (
    BasisError, BasisCell, CohomologyBasis, ProductTable, wedge_concat,
    chain_product, wedge_basis_cup, verify_presentation,
    minimal_generator_probe, height1_basis, umbrella_basis,
    umbrella_relations, diamond_basis, diamond_relations,
)

__version__ = "0.1.0"
