"""Exact homology cobordism invariant bounds.

Computes certified bounds on the spin-filling invariants m and mbar for
Z/2-homology spheres presented as lens spaces, plumbing boundaries, or
surgeries on knots, together with two-bridge knot invariants and
obstruction reports.  All arithmetic is exact (integers and Fractions).
"""

from .arith import dedekind_sum, gcd_ext, is_square_mod, jacobi, sawtooth
from .cobordism import (
    MBounds,
    OrderCertificate,
    RokhlinClass,
    S3,
    SpinFillingData,
    bound_from_filling,
    branched_cover_bounds,
    connected_sum,
    furuta_allows,
    infinite_order_certificate,
    merge_bounds,
    reverse_orientation,
)
from .contfrac import (
    AdmissibleCF,
    admissible_cf,
    eval_cf,
    find_admissible_cf,
    find_positive_cf,
    format_cf,
    parse_cf,
    validate_admissible,
)
from .errors import DomainError, EvaluationError, ResourceLimitError
from .lens import LensSpace, classify_order, family, m_bounds, rokhlin, table1
from .plumbing import (
    MontesinosInvariants,
    MpqrTriple,
    StarPlumbing,
    TpqrInvariants,
    det_exact,
    inertia,
    montesinos_invariants,
    sigma_pqr_bounds,
    signature_exact,
    tpqr_invariants,
)
from .surgery import (
    CharSurfaceData,
    ObstructionReport,
    ObstructionTest,
    SurgeryCandidate,
    arf_from_surgery,
    congruence_obstruction,
    m_bounds_from_surgery,
    obstruction_report,
    qr_obstruction,
    slice_genus_lower,
    slice_knot_surgery_class,
    spin_surgery_model,
    unknotting_one_obstruction,
)
from .twobridge import (
    FourPlat,
    GenusBound,
    OddCounts,
    crossing_change_genus_bound,
    determinant,
    odd_counts,
    signature,
    slice_genus_upper,
)

__version__ = "0.1.0"
