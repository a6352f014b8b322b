"""Bicomplex numbers, their elementary functions, derivatives, integrals and Fueter-regular companions."""

from .algebra import (
    DEFAULT_TOL,
    I,
    J,
    K,
    ONE,
    ZERO,
    Bicomplex,
    Octonion,
    Quaternion,
    Tricomplex,
    bic_cn,
    bic_conj,
    bic_div,
    bic_inverse,
    bic_mul,
    bic_norm,
    bic_pow_int,
    is_singular,
    oct_mul,
    quat_conj,
    quat_div,
    quat_inverse,
    quat_mul,
    quat_square_norm,
    tri_mul,
)
from .errors import *  # noqa: F401,F403
from .functions import (
    bic_arccos,
    bic_cos,
    bic_cosh,
    bic_exp,
    bic_pow,
    bic_sin,
    bic_sinh,
    bic_tan,
    bic_tanh,
    blog,
    complex_argument,
    harmonic_polys,
    j_mul,
    PeriodLattice,
    PolarForm,
    polar_form,
    poly_eval,
    rational_eval,
    scale_factor,
)
from .calculus import (
    ALL_CLASSES,
    ArgClass,
    BicomplexFn,
    DerivativeReport,
    check_bicomplex_cr,
    class_cr_residual,
    constant,
    derivative_c2,
    derivative_limit,
    derivative_n,
    derivative_report,
    partial_a,
    partial_a_conj,
    partial_b,
    partial_b_conj,
    singular_direction_residual,
)
from .integration import (
    Curve,
    Surface,
    TaylorExpansion,
    TwiningNumber,
    component_identities,
    cauchy_integral_formula,
    cauchy_theorem_check,
    green_theorem_check,
    line_integral,
    make_curve,
    make_surface,
    path_independence_check,
    taylor_expand,
    twining_number,
)
from .harmonic import (
    OperatorKind,
    apply_operator,
    check_conjugate_fueter,
    check_fueter,
    check_laplace4,
    classify,
    regular_derivative,
    to_argument_class,
)
from .registry import REGISTRY, get_function

__version__ = "0.1.0"
