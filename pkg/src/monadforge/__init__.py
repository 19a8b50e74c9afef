"""monadforge: exact construction and verification of linear monads on
products of projective spaces.

The package builds instanton-style banded matrices of linear forms on an
odd-dimensional projective space, pulls them back along the multidegree-
(1,...,1) coordinate table of a product of projective spaces, and checks
the monad axioms exactly: zero composition symbolically, maximal fiberwise
rank by exhaustive finite-field sweeps and seeded rational sampling.  A
Bott/Kunneth engine supplies line-bundle cohomology dimensions, and the
intersection-ring module supplies degrees, slopes and normalization against
the polarization O(1,...,1); together they drive machine-checked stability
and simplicity certificates.
"""

from .spaces import MultiDegree, SpaceSpec, Variable
from .poly import MultiPoly
from .linalg import rank_exact
from .matrices import LinearMatrix, evaluate_matrix, grid_is_zero, mat_mul
from .points import (
    ProjectivePoint,
    enumerate_points,
    is_prime,
    point_count,
    random_rational_point,
)
from .segre import (
    SegreTable,
    enumerate_monomials,
    segre_source_space,
    segre_table,
    source_coord_label,
    substitute,
    substitute_poly,
)
from .cohomology import (
    CohomTable,
    VanishingReport,
    bott_vector,
    check_vanishing,
    euler_characteristic,
    h0_wedge_linebundle_sum,
    kunneth_table,
)
from .intersection import (
    BundleSummary,
    ChowTruncation,
    HoppeThreshold,
    Normalization,
    NormalizationError,
    degree_L,
    delta_L,
    hoppe_threshold,
    normalize_L,
    slope_L,
)
from .monad import (
    DisplaySummary,
    FloystadVerdict,
    Monad,
    MonadParams,
    ambient_dim,
    build_banded,
    build_monad,
    display_summary,
    family_space,
    floystad_check,
    monad_euler,
    mu_param,
)
from .verify import (
    BudgetExceededError,
    FiberFailure,
    VerificationReport,
    check_composition_zero,
    composition_product,
    exhaustive_fiber_check,
    merge_reports,
    random_fiber_check,
)
from .certify import (
    HoppeObligations,
    Obligation,
    SimplicityCertificate,
    StabilityCertificate,
    VanishingCheck,
    WedgeBound,
    certificate_json,
    has_positive_group_sums,
    hoppe_obligations,
    kernel_section_count,
    positive_sum_twists,
    simplicity_certificate,
    stability_certificate,
)
from .export import macaulay2_script

__version__ = "0.1.0"
