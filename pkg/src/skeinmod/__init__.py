"""Exact computations with Kauffman bracket skein modules: torus products,
handle-slide quotients at A = i, boundary-driven rewriting, and SL2
torsion certificates for Seifert fibered spaces."""

from .chebyshev import chebyshev_S, chebyshev_T, format_int_poly, parse_int_poly
from .cyclotomic import (
    CycNum,
    cyclotomic_poly,
    rational_sqrt_cyclotomic,
    root_of_unity,
    root_of_unity_with_trace,
)
from .gaussian import GaussRat, laurent_at_i
from .handlebody import (
    Poly3,
    gamma,
    gamma_at_i_closed,
    gamma_prime,
    gamma_prime_at_i_closed,
    monomial_grading,
    nested_truncation_dimension,
    parse_poly3,
    relation_core,
    specialize_at_i,
    truncated_quotient_dimension,
    v_restricted_cores,
    verify_Jprime_containment,
)
from .laurent import (
    LaurentFraction,
    LaurentPoly,
    parse_laurent,
    parse_laurent_fraction,
)
from .linalg import bareiss_rank, field_nullspace, field_rank, smith_normal_form
from .mat2 import (
    Mat2,
    SeparatingWitness,
    SubalgebraClass,
    algebra_closure,
    is_irreducible,
    separating_witness,
    sl2_sqrt,
    standardize_pair,
    trace_triple_realize,
)
from .rewrite import (
    Complexity,
    ModuleElement,
    NotReducible,
    SlopeData,
    StepBudgetExceeded,
    affine_class,
    boundary_multiply,
    complexity,
    dehn_fill_quotient,
    f12_relations,
    format_module_element,
    irreducible_classes,
    is_reduced_label,
    normalize,
    parse_module_element,
    reduce_step,
)
from .seifert import (
    BuildError,
    NoTorsionResult,
    Representation,
    SeifertData,
    TorsionCertificate,
    build_representation,
    certify,
    classify,
    format_word,
    homology,
    presentation,
    psi_evaluate,
    reverify_certificate,
    word_inverse,
    word_mul,
)
from .torus import FGElement, fg_chebyshev_basis, fg_multiply, fg_normalize, format_fg, parse_fg

__version__ = "0.1.0"

__all__ = [
    "BuildError",
    "Complexity",
    "CycNum",
    "FGElement",
    "GaussRat",
    "LaurentFraction",
    "LaurentPoly",
    "Mat2",
    "ModuleElement",
    "NoTorsionResult",
    "NotReducible",
    "Poly3",
    "Representation",
    "SeifertData",
    "SeparatingWitness",
    "SlopeData",
    "StepBudgetExceeded",
    "SubalgebraClass",
    "TorsionCertificate",
    "affine_class",
    "algebra_closure",
    "bareiss_rank",
    "boundary_multiply",
    "build_representation",
    "certify",
    "chebyshev_S",
    "chebyshev_T",
    "classify",
    "complexity",
    "cyclotomic_poly",
    "dehn_fill_quotient",
    "f12_relations",
    "fg_chebyshev_basis",
    "fg_multiply",
    "fg_normalize",
    "field_nullspace",
    "field_rank",
    "format_fg",
    "format_int_poly",
    "format_module_element",
    "format_word",
    "gamma",
    "gamma_at_i_closed",
    "gamma_prime",
    "gamma_prime_at_i_closed",
    "homology",
    "irreducible_classes",
    "is_irreducible",
    "is_reduced_label",
    "laurent_at_i",
    "monomial_grading",
    "nested_truncation_dimension",
    "normalize",
    "parse_fg",
    "parse_int_poly",
    "parse_laurent",
    "parse_laurent_fraction",
    "parse_module_element",
    "parse_poly3",
    "presentation",
    "psi_evaluate",
    "rational_sqrt_cyclotomic",
    "reduce_step",
    "relation_core",
    "reverify_certificate",
    "root_of_unity",
    "root_of_unity_with_trace",
    "separating_witness",
    "sl2_sqrt",
    "smith_normal_form",
    "specialize_at_i",
    "standardize_pair",
    "trace_triple_realize",
    "truncated_quotient_dimension",
    "v_restricted_cores",
    "verify_Jprime_containment",
    "word_inverse",
    "word_mul",
]
