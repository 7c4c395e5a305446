"""fockkit: Fock spaces, affine Weyl groups, Kazhdan-Lusztig polynomials and Dunkl operators."""

from .affine_weyl import (
    AffinePermutation,
    AffineRoot,
    AffineWeight,
    antidominant_rep,
    bruhat_leq,
    dot_act,
    linear_act,
    nu_project,
    order_triangle_leq,
    stabilizer_generators,
    tilde,
    weight_leq,
)
from .category_o import (
    CherednikParams,
    HypothesisReport,
    OrderRelation,
    PiVariant,
    block_decomposition_numbers,
    block_weight,
    charge_weight,
    check_theta_pairing_identity,
    cherednik_order,
    conjecture_hypotheses,
    parabolic_decomposition_numbers,
    params_from_block,
    params_from_charge,
    pi_shift,
    predicted_decomposition,
    theta,
    triangle_leq_block,
)
from .cherednik import (
    DunklParams,
    GroupElement,
    PolyN,
    RelationReport,
    dunkl_apply,
    euler_apply,
    euler_grading_check,
    param_convert,
    verify_relations,
)
from .combinatorics import (
    Composition,
    MultiPartition,
    Partition,
    embed_weight,
    multipartitions_fitting,
    unembed_weight,
)
from .config import Settings, load_settings
from .cyclotomic import CycloNumber, eps_power
from .errors import (
    BudgetExceeded,
    CacheError,
    ConfigError,
    FockkitError,
    InternalNonDivisible,
    InvalidInput,
    NotMinimalCosetRep,
    NotNuRegular,
    Unsupported,
)
from .fock_space import (
    ChevalleyOp,
    DecompMatrix,
    FockLabel,
    WedgeVector,
    alpha_map,
    alpha_to_wedge,
    canonical_Gminus,
    chevalley_apply,
    chevalley_standard,
    decode_index,
    decomposition_matrices,
    encode_index,
    standard_vector,
    to_fock_label,
    underline_alpha,
    wedge_to_alpha,
    yvonne_delta_plus,
)
from .kl_engine import (
    CharacterMatrix,
    CoxeterContext,
    CoxeterKind,
    IntPoly,
    alternating_sum_kl_minus,
    character_matrix,
    configure_cache,
    jordan_holder_leq,
    kl_poly,
    parabolic_kl_minus,
)
from .serialization import dump_csv, dump_json, payload_frame

__all__ = [
    "AffinePermutation",
    "AffineRoot",
    "AffineWeight",
    "antidominant_rep",
    "bruhat_leq",
    "dot_act",
    "linear_act",
    "nu_project",
    "order_triangle_leq",
    "stabilizer_generators",
    "tilde",
    "weight_leq",
    "CherednikParams",
    "HypothesisReport",
    "OrderRelation",
    "PiVariant",
    "block_decomposition_numbers",
    "block_weight",
    "charge_weight",
    "check_theta_pairing_identity",
    "cherednik_order",
    "conjecture_hypotheses",
    "parabolic_decomposition_numbers",
    "params_from_block",
    "params_from_charge",
    "pi_shift",
    "predicted_decomposition",
    "theta",
    "triangle_leq_block",
    "DunklParams",
    "GroupElement",
    "PolyN",
    "RelationReport",
    "dunkl_apply",
    "euler_apply",
    "euler_grading_check",
    "param_convert",
    "verify_relations",
    "Composition",
    "MultiPartition",
    "Partition",
    "embed_weight",
    "multipartitions_fitting",
    "unembed_weight",
    "Settings",
    "load_settings",
    "CycloNumber",
    "eps_power",
    "BudgetExceeded",
    "CacheError",
    "ConfigError",
    "FockkitError",
    "InternalNonDivisible",
    "InvalidInput",
    "NotMinimalCosetRep",
    "NotNuRegular",
    "Unsupported",
    "ChevalleyOp",
    "DecompMatrix",
    "FockLabel",
    "WedgeVector",
    "alpha_map",
    "alpha_to_wedge",
    "canonical_Gminus",
    "chevalley_apply",
    "chevalley_standard",
    "decode_index",
    "decomposition_matrices",
    "encode_index",
    "standard_vector",
    "to_fock_label",
    "underline_alpha",
    "wedge_to_alpha",
    "yvonne_delta_plus",
    "CharacterMatrix",
    "CoxeterContext",
    "CoxeterKind",
    "IntPoly",
    "alternating_sum_kl_minus",
    "character_matrix",
    "configure_cache",
    "jordan_holder_leq",
    "kl_poly",
    "parabolic_kl_minus",
    "dump_csv",
    "dump_json",
    "payload_frame",
]
