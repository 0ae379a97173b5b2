"""Counting solutions of monomial equations over small finite fields.

The count of all-nonzero solutions comes from a character sum over the
dual of the monomial map's image group; brute-force enumeration backs
every formula as an independent oracle.
"""

from .field import FieldCtx, build_field
from .characters import (
    additive_char_eval,
    char_tuple_eval,
    gauss_sum,
    gauss_sum_rescaled,
    gauss_sum_table,
    lambda_exponent,
    mult_char_eval,
    product_gauss_sum,
)
from .lattice import (
    DualGroupBasis,
    SnfDecomposition,
    dual_group,
    enumerate_dual,
    kernel_size_d,
    restrict_lambda_trivial,
    smith_normal_form,
)
from .counting import (
    ConsistencyError,
    CountReport,
    DivisibleExponentWarning,
    LimitExceededError,
    MonomialForm,
    ResidualToleranceError,
    eval_form,
    n_bar_bruteforce,
    n_bar_formula,
    n_total_bruteforce,
    n_total_inclusion_exclusion,
    s_bar_direct,
    s_bar_via_characters,
    sum_over_psi_check,
)
from .cli import parse_equation_file, format_equation

__all__ = [
    "FieldCtx",
    "build_field",
    "additive_char_eval",
    "mult_char_eval",
    "char_tuple_eval",
    "gauss_sum",
    "gauss_sum_rescaled",
    "gauss_sum_table",
    "lambda_exponent",
    "product_gauss_sum",
    "SnfDecomposition",
    "DualGroupBasis",
    "smith_normal_form",
    "dual_group",
    "enumerate_dual",
    "restrict_lambda_trivial",
    "kernel_size_d",
    "MonomialForm",
    "CountReport",
    "LimitExceededError",
    "ResidualToleranceError",
    "ConsistencyError",
    "DivisibleExponentWarning",
    "eval_form",
    "s_bar_direct",
    "s_bar_via_characters",
    "n_bar_formula",
    "n_bar_bruteforce",
    "n_total_inclusion_exclusion",
    "n_total_bruteforce",
    "sum_over_psi_check",
    "parse_equation_file",
    "format_equation",
]
