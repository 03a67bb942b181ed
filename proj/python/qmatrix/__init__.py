"""Exact combinatorics of quantized matrix algebras.

Restricted permutations under the reverse Bruhat order, cross-checked
invariant-prime counts, quantum-minor generator catalogs, PBW normal forms,
and the exact rational elimination runner. Permutations are plain lists in
one-line notation; counts are Python ints; rationals are "num/den" strings.
"""

from ._core import (
    ZeroPivotError,
    barrier_count,
    binomial,
    bruhat_leq,
    compose,
    dd_inverse_run,
    dd_run,
    dd_step,
    determinant,
    enumerate_index_set,
    enumerate_restricted,
    enumerate_restricted_stratum,
    gens_minus,
    gens_plus,
    hasse,
    hasse_dot,
    hasse_json,
    hspec_count,
    in_restricted_set,
    inverse,
    is_quantum_det_central,
    length,
    lemma_conditions_check,
    leq_j,
    longest_element,
    mp_leq,
    nesting_check,
    normalize_word,
    poly_bernoulli_neg,
    quantum_det_str,
    quantum_minor_str,
    random_matrix,
    rank_count,
    sigma_zero,
    stirling2,
    transfer_spotcheck,
    u_helper,
    verify_relations,
    vesztergombi_count,
    xi_catalog,
    xi_entry,
)

__version__ = "0.1.0"

__all__ = [
    "ZeroPivotError",
    "barrier_count",
    "binomial",
    "bruhat_leq",
    "compose",
    "dd_inverse_run",
    "dd_run",
    "dd_step",
    "determinant",
    "enumerate_index_set",
    "enumerate_restricted",
    "enumerate_restricted_stratum",
    "gens_minus",
    "gens_plus",
    "hasse",
    "hasse_dot",
    "hasse_json",
    "hspec_count",
    "in_restricted_set",
    "inverse",
    "is_quantum_det_central",
    "length",
    "lemma_conditions_check",
    "leq_j",
    "longest_element",
    "mp_leq",
    "nesting_check",
    "normalize_word",
    "poly_bernoulli_neg",
    "quantum_det_str",
    "quantum_minor_str",
    "random_matrix",
    "rank_count",
    "sigma_zero",
    "stirling2",
    "transfer_spotcheck",
    "u_helper",
    "verify_relations",
    "vesztergombi_count",
    "xi_catalog",
    "xi_entry",
]
