"""smithforge: exact arithmetic for power gcd/lcm matrices on integer sets.

Build the matrices, analyze the divisibility structure of the underlying
set, evaluate closed-form determinants and inverses, and certify or refute
divisibility between matrices in the integer matrix ring.  Everything is
computed with arbitrary-precision integers and rationals; there are no
floating-point paths and no tolerances.
"""

from .divstruct import ConditionGReport, ConditionGWitness, DivisorSet, new_set
from .errors import (
    BadIndex,
    BadRange,
    ConditionGFails,
    DimensionMismatch,
    DuplicateElement,
    EmptyInput,
    InternalMismatch,
    MalformedInput,
    NoGtds,
    NonPositive,
    NotAProperDivisor,
    NotAnElement,
    NotDivisibleExponents,
    NotGcdClosed,
    SingularMatrix,
    SmithforgeError,
)
from .exmat import (
    ExactMatrix,
    NonIntegralWitness,
    RationalMatrix,
    as_integer_matrix,
    det,
    det_cofactor,
    inverse,
    mul,
    power_gcd_matrix,
    power_lcm_matrix,
    to_csv_text,
    to_json_obj,
)
from .smithcore import (
    KIND_GCD,
    KIND_LCM,
    DivisibilityCertificate,
    alpha,
    alpha_from_gtds,
    alpha_product,
    certificate_to_json_obj,
    certify_divisibility,
    gcd_kernel,
    gcd_kernel_closed,
    inverse_coeff,
    inverse_coeff_delta,
    inverse_coeff_pattern,
    lcm_kernel,
    lcm_kernel_closed,
    quotient_from_kernels,
    smith_determinant,
    squarefree_sum_determinant,
    structured_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # sets and structure
    "ConditionGReport",
    "ConditionGWitness",
    "DivisorSet",
    "new_set",
    # errors
    "BadIndex",
    "BadRange",
    "ConditionGFails",
    "DimensionMismatch",
    "DuplicateElement",
    "EmptyInput",
    "InternalMismatch",
    "MalformedInput",
    "NoGtds",
    "NonPositive",
    "NotAProperDivisor",
    "NotAnElement",
    "NotDivisibleExponents",
    "NotGcdClosed",
    "SingularMatrix",
    "SmithforgeError",
    # exact matrices
    "ExactMatrix",
    "NonIntegralWitness",
    "RationalMatrix",
    "as_integer_matrix",
    "det",
    "det_cofactor",
    "inverse",
    "mul",
    "power_gcd_matrix",
    "power_lcm_matrix",
    "to_csv_text",
    "to_json_obj",
    # structure theory
    "KIND_GCD",
    "KIND_LCM",
    "DivisibilityCertificate",
    "alpha",
    "alpha_from_gtds",
    "alpha_product",
    "certificate_to_json_obj",
    "certify_divisibility",
    "gcd_kernel",
    "gcd_kernel_closed",
    "inverse_coeff",
    "inverse_coeff_delta",
    "inverse_coeff_pattern",
    "lcm_kernel",
    "lcm_kernel_closed",
    "quotient_from_kernels",
    "smith_determinant",
    "squarefree_sum_determinant",
    "structured_inverse",
]
