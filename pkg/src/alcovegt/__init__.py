"""Alcove path model and Gelfand-Tsetlin patterns for type A highest-weight crystals."""
from .crystal import (
    CrystalGraph,
    character,
    element_from_string_datum,
    generate_crystal,
    string_datum,
    unique_isomorphism,
    verify_crystal_axioms,
)
from .gallery import (
    AlcoveModel,
    alcove_crystal,
    embed_psi,
    enumerate_admissible,
    extend_phi,
    fold,
    root_operator_E,
    root_operator_F,
    weight,
)
from .isomorphism import (
    admissible_from_gt,
    canonicalize,
    gt_from_admissible,
    is_almost_decreasing,
    n_stats,
    verify_decreasing_props,
)
from .paths import (
    GammaSequence,
    extend_path,
    gamma_lambda,
    lex_path,
    rho_lex_path,
    rho_shift_concat,
    validate_gamma,
)
from .roots import iA_word, pairing, reflect_hyperplane, reflection_order
from .tableaux import (
    GTPattern,
    SSYT,
    gt_crystal,
    gt_from_ssyt,
    gt_string_formula,
    ssyt_crystal,
    ssyt_from_gt,
    ssyt_operator,
)

__version__ = "0.1.0"
