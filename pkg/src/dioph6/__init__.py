"""Exact construction, certification and reduction analysis of rational
Diophantine sextuples.

A rational Diophantine m-tuple is a set of m nonzero rationals such that the
product of any two of them increased by 1 is a perfect square.  This package
builds sextuples from a one-parameter elliptic-curve construction, certifies
every pairwise square condition with exact witnesses, and analyzes the
reduction types and p-adic valuations that make the construction work.
All arithmetic is exact; nothing here touches floating point.
"""

from .errors import ConsistencyError, DegeneracyError, UnfactorableError
from .exactnum import (
    DEFAULT_FACTOR_BOUND,
    Rat,
    format_rat,
    is_square,
    is_squarefree,
    isqrt,
    mod_p,
    parse_rat,
    sqrt_exact,
    vp,
)
from .family import (
    SigmaTriple,
    TripleABC,
    curve_E,
    curve_Epp,
    curve_Estar,
    map_u,
    map_w,
    map_w_constants,
    map_X,
    plane_curve_value,
    point_Pstar,
    point_R,
    point_Tstar,
    quartic_condition,
    require_param,
    sigma1_from_x,
    sigma2_from,
    sigma3,
    sigma_triple_from_x,
    three_torsion_condition,
    three_torsion_value,
    triple_from_multiple,
)
from .paramfam import (
    CatalogEntry,
    FamilyPoint,
    PRODUCT34_CURVE,
    PRODUCT34_GENERATOR,
    abc_closed_form,
    catalog,
    catalog_entry,
    def_closed_form,
    family_point,
    family_triple,
    rank_curve_membership,
    reconstruct_product34_triple,
    sign_signature,
)
from .reduction_lab import (
    BadPrimesReport,
    ReductionReport,
    ValuationRow,
    bad_primes_epp,
    classify,
    epp_invariants,
    mod3_sign_table,
    nonsingular_residues,
    p_minimal_model,
    valuation_table,
)
from .sextuple_engine import (
    DiophTuple,
    PairWitness,
    SextupleRecord,
    VerificationReport,
    extend_to_sextuple,
    half_point_check,
    induced_curve,
    order3_check,
    point_half,
    point_Pprime,
    point_Sprime,
    square_product_check,
    verify_tuple,
)
from .weierstrass import Curve, INFINITY, Point, StdQuantities, point

__version__ = "0.1.0"
