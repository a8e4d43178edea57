"""Exact algebra of morphisms R^{0|k} -> R^n.

Grassmann-valued pullbacks of polynomial test functions, brute-force
homomorphism checks, the k = 2 parameterization by dependent vector pairs,
fiber-variety dimensions, the connection/Hessian comparison map and rank
stratification for k >= 3. All arithmetic is over ``fractions.Fraction``.
"""

from .bivector import (
    Bivector,
    Component,
    FiberPoint,
    component_of,
    fiber_membership,
    local_fiber_dimension,
    minor_jacobian,
    pair_rank,
    reduced_dimension,
    wedge,
)
from .connection import (
    ConnectionData,
    ExtendedPoint,
    check_diagram,
    embed_j,
    hessian_apply,
    hessian_operator,
    psi_nabla,
)
from .errors import (
    ConstraintViolationError,
    DimensionMismatchError,
    InconsistencyError,
    SpecError,
    UnsupportedKError,
)
from .grassmann import GrassmannElement, g_add, g_coefficient, g_mul, index_set
from .linalg import as_scalar, det, rank
from .morphism import (
    ClassifyingPoint,
    EvenOperator,
    PullbackData,
    ViolationReport,
    apply_pullback,
    check_homomorphism,
    is_valid_morphism,
    key_identity_residual,
    psi_forward,
    psi_inverse,
)
from .polyfun import Polynomial, monomials_up_to, p_deriv, p_eval, p_mul
from .strata import (
    OddVectorSystem,
    StratumReport,
    check_k3_morphism,
    classify_stratum,
    jacobian_dimension_estimate,
    sample_stratum,
    stratum_dimension_oracle,
    stratum_report,
    wedge_matrix,
)

__version__ = "0.1.0"
