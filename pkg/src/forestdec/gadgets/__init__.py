"""Gadgets, forcers and the hardness reductions built from them."""

from .cnf import (
    CnfInstance,
    check_me_assignment,
    emit_dimacs,
    parse_dimacs,
    validate_3b2sat,
    validate_meksat,
)
from .core import Builder, Embedding, Gadget
from .forcers import (
    build_binary_tree_orientation,
    k2_alpha_in_forcer,
    kk_minus2_in_forcer,
    kl_minus2_in_forcer,
    long_k_alpha_in_forcer,
    long_kl_out_forcer,
    minus2_in_forcer,
    short_k_in_forcer,
    short_kl_out_forcer,
)
from .galaxy import kl_alpha_clause_gadget_bogd, q_variable_gadget_bogd
from .linear import k_clause_gadget, k_variable_gadget, kl_clause_gadget_dlf, klt_variable_gadget, subset_name
from .reductions import (
    BackMap,
    GadgetCopy,
    HamiltonianCycle,
    Identification,
    ReductionKind,
    ReductionOutput,
    assignment_to_decomposition,
    decomposition_to_assignment,
    generate_2diregular,
    is_2diregular,
    reduce_3b2sat_to_bdlfd,
    reduce_hamiltonicity_to_bdlfd,
    reduce_lplus1sat_to_bogd_kl,
    reduce_me1sat_to_bdlfd,
    reduce_meksat_to_bogd_kk,
)

__all__ = [
    "BackMap",
    "Builder",
    "CnfInstance",
    "Embedding",
    "Gadget",
    "GadgetCopy",
    "HamiltonianCycle",
    "Identification",
    "ReductionKind",
    "ReductionOutput",
    "assignment_to_decomposition",
    "build_binary_tree_orientation",
    "check_me_assignment",
    "decomposition_to_assignment",
    "emit_dimacs",
    "generate_2diregular",
    "is_2diregular",
    "k2_alpha_in_forcer",
    "k_clause_gadget",
    "k_variable_gadget",
    "kk_minus2_in_forcer",
    "kl_alpha_clause_gadget_bogd",
    "kl_clause_gadget_dlf",
    "kl_minus2_in_forcer",
    "klt_variable_gadget",
    "long_k_alpha_in_forcer",
    "long_kl_out_forcer",
    "minus2_in_forcer",
    "parse_dimacs",
    "q_variable_gadget_bogd",
    "reduce_3b2sat_to_bdlfd",
    "reduce_hamiltonicity_to_bdlfd",
    "reduce_lplus1sat_to_bogd_kl",
    "reduce_me1sat_to_bdlfd",
    "reduce_meksat_to_bogd_kk",
    "short_k_in_forcer",
    "short_kl_out_forcer",
    "subset_name",
    "validate_3b2sat",
    "validate_meksat",
]
