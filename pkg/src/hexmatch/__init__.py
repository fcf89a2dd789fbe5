"""K4-equivariant perfect matchings on the Boolean hypercube.

The group generated by bitwise complement and bit reversal acts on
{0,1}^n; this package enumerates its orbits, builds and prices the
equivariant perfect matchings, exhaustively minimizes total Hamming cost,
and checks the King Wen hexagram sequence against the optimum.

Hot loops run on a compiled kernel when the extension is available; see
``hexmatch.kernel_backend()``.
"""

from hexmatch._kernels import BACKEND as _BACKEND
from hexmatch.bits import (
    MAX_WIDTH,
    BitVector,
    comp_rev,
    complement,
    hamming,
    is_antisymmetric,
    is_palindrome,
    make,
    reverse,
)
from hexmatch.orbits import (
    K4Element,
    KIND_ORDER,
    OrbitCensus,
    OrbitClass,
    OrbitRecord,
    PairingKind,
    apply,
    canonical_orbits,
    compose,
    orbit_census,
    orbit_of,
)
from hexmatch.matching import (
    CostReport,
    InvalidMatchingError,
    Matching,
    PairClassification,
    ValidationReport,
    Violation,
    build_complement_only,
    build_mixed_optimal,
    build_reverse_priority,
    classify_pair,
    cost_report,
    reverse_priority_partner,
    total_cost,
    validate,
)
from hexmatch.optimize import (
    InfeasibleSpaceError,
    NoConflictReport,
    OptimizationResult,
    SearchSpace,
    SweepRow,
    conjecture_sweep,
    enumerate_space,
    minimize,
    verify_no_conflict,
)
from hexmatch.kingwen import (
    IsomorphismReport,
    KingWenTable,
    RegularityReport,
    TableParseError,
    default_table,
    parse_table,
    serialize_table,
    verify_isomorphism,
    verify_regularity,
)
from hexmatch.kingwen import pairs as kingwen_pairs

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Which kernel backend is active: 'compiled' or 'pure'."""
    return _BACKEND
