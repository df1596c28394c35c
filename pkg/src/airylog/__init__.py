"""airylog: log-Airy integrals through independent analytic pipelines with
a quadrature oracle.

The package computes the two integrals of (Ai'(x)/Ai'(0))^alpha times its
logarithm (alpha = 1, 2) through root-based series, closed-form ODE
solutions, incomplete Mellin transforms and zeta-accelerated sums, and
certifies every route against adaptive quadrature.
"""

from .ddreal import XReal
from .errors import (
    AccuracyError,
    AccuracyWarning,
    ConvergenceError,
    DomainError,
    IterationError,
    RangeError,
    StabilityError,
)
from .kernel import (
    AI0,
    AIP0,
    BI0,
    BIP0,
    ETA,
    HypSeries,
    compensated_sum,
    gamma,
    hyp,
    hyp_pfq,
    pochhammer,
)
from .airy import AiryState, JPair, airy, airy_asym, jpair, scorer_gi
from .roots import RootTable, refine_root, root_seed, roots_upto
from .zeta import ZetaTable, zeta_closed, zeta_eta_poly, zeta_incomplete
from .oracle import (
    OracleResult,
    integrate_halfline,
    oracle_integral1,
    oracle_integral2,
    oracle_j_summand,
    oracle_mellin,
    oracle_stieltjes,
)
from .results import TransformResult, TruncationConfig
from .mellin1 import (
    CdePoly,
    PQPoly,
    amatrix,
    cde_ladder,
    genfunc_lambda,
    genfunc_xi,
    mellin_closed,
    mellin_prime,
    pq_ladder,
    xi_lambda_derivs,
)
from .mellin2 import (
    Jn_smalla,
    PqrPoly,
    PQRPoly2,
    calI,
    genfunc2,
    irreducible_neg1,
    mellin2,
    pqr2_ladder,
    pqr_ladder,
    reid_moment,
)
from .stieltjes1 import (
    StieltjesContext,
    bigI1_closed,
    bigI_asym,
    bigI_recurrence,
    bigI_relations,
    bigI_smalla,
    bigI_tail_asym,
    integral1_accelerated,
    integral1_series,
)
from .stieltjes2 import (
    BigJTerm,
    J1Solution,
    J_asym,
    J_recurrences,
    bigJ_asym,
    bigJ_closed,
    bigJ_term,
    constants_c,
    integral2_accelerated,
    integral2_series,
    solve_J1,
)

__version__ = "0.1.0"
