"""Real Clifford algebras Cl(p,q) for n <= 5, exterior-exponent
parametrisations of the spinor groups Spin+(p,q), and the two-to-one cover
map onto SO+(p,q) with explicit Cl(1,3) matrix tables."""

from .algebra import (
    DEFAULT_TOL,
    Multivector,
    Signature,
    blade_product,
    clifford_exp,
    clifford_mul,
    commutator,
    epsilon,
    exterior_mul,
    pseudoscalar,
    wedge_product,
)
from .errors import (
    BetaOutOfRange,
    LambdaNotPositive,
    NotSimpleBivector,
    NotSpinElement,
    ParametrisationInconsistent,
    RhoNegative,
    SpinParamError,
)
from .mvtext import MvParseError, format_float, parse, serialize
from .rotations import (
    OrthoMatrix,
    OrthoReport,
    closed_form_P13_adjoint,
    closed_form_T13,
    cofactor_det,
    compose,
    random_spin_element,
    spin_to_so,
    verify_orthogonal,
)
from .spinors import (
    Adjoint,
    Bivector,
    Parametrisation,
    Regular,
    SpinElement,
    beta_of,
    bivector_pairs,
    decompose,
    decompose_low_dim,
    ext_exp,
    is_spin_element,
    lambda_closed_form,
    lambda_of,
    parametrize_adjoint,
    parametrize_low_dim,
    parametrize_regular,
    reconstruct,
    rho_closed_form,
    rho_of,
    spin_residuals,
    wedge_of_vectors,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "Adjoint",
    "BetaOutOfRange",
    "Bivector",
    "LambdaNotPositive",
    "Multivector",
    "MvParseError",
    "NotSimpleBivector",
    "NotSpinElement",
    "OrthoMatrix",
    "OrthoReport",
    "Parametrisation",
    "ParametrisationInconsistent",
    "Regular",
    "RhoNegative",
    "Signature",
    "SpinElement",
    "SpinParamError",
    "beta_of",
    "bivector_pairs",
    "blade_product",
    "clifford_exp",
    "clifford_mul",
    "closed_form_P13_adjoint",
    "closed_form_T13",
    "cofactor_det",
    "commutator",
    "compose",
    "decompose",
    "decompose_low_dim",
    "epsilon",
    "ext_exp",
    "exterior_mul",
    "format_float",
    "is_spin_element",
    "lambda_closed_form",
    "lambda_of",
    "parametrize_adjoint",
    "parametrize_low_dim",
    "parametrize_regular",
    "parse",
    "pseudoscalar",
    "random_spin_element",
    "reconstruct",
    "rho_closed_form",
    "rho_of",
    "serialize",
    "spin_residuals",
    "spin_to_so",
    "verify_orthogonal",
    "wedge_of_vectors",
    "wedge_product",
]
