"""Linear programming bounds for spherical (k,k)-designs.

Exact Gegenbauer/Jacobi polynomial arithmetic, spherical-code moment and
energy verification, cone-membership bound certificates, the universal
cardinality bound with its quadrature optimality test, and a cutting-plane
search for improving polynomials.
"""

from .certificates import (
    BoundCertificate,
    ConeMembership,
    ConeViolationError,
    cardinality_bound,
    certificate_from_json,
    certificate_to_json,
    check_cone,
    energy_lower_bound,
    energy_upper_bound,
    equality_diagnostics,
    verify_identity,
)
from .codes import (
    DesignReport,
    InfiniteEnergyError,
    NotAntipodalError,
    OverlapError,
    SphericalCode,
    UnknownConstructionError,
    antipodal_double,
    antipodal_halve,
    construct,
    energy,
    fourth_moment_residual,
    is_design,
    is_kk_design,
    load_code,
    moment,
    per_point_moment,
    save_code,
)
from .gegenbauer import (
    GegenbauerExpansion,
    JacobiParams,
    adjacent,
    expand,
    gegenbauer,
    reconstruct,
)
from .polynomials import Polynomial
from .potentials import Potential, gaussian, parse_potential, polynomial_potential, riesz, tabulated
from .quadrature import (
    QuadratureRule,
    SingularSystemError,
    TestFunctionTable,
    gegenbauer_zeros,
    levenshtein_rule,
    optimality_scan,
    test_function,
)
from .search import SearchOutcome, SearchProblem, search, solve_finite_lp
from .universal import (
    TightnessVerdict,
    UniversalBoundResult,
    dgs_bound,
    dgs_polynomial,
    tightness,
    universal_bound,
)

__version__ = "0.1.0"
