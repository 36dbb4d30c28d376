"""Exact computations with the stratification of spaces of rational maps
P^1 -> P^n: rank/gcd classification, wedge-minor graph coordinates and
boundary limits, stratum factorization and finite-field censuses,
determinantal-ideal verification, and the blowup topology."""

from .fields import GF, QQ, Fp, normalize_projective
from .homog import HomogPoly, form, form_divexact, form_gcd
from .matrix import ExactMatrix, subsets_colex
from .multipoly import MultiPoly, PolyRing
from .resultant import (
    MapPoint,
    StratumReport,
    gcd_oracle_degree,
    in_stratum,
    multiplier_vector,
    rank_profile,
    resultant_matrix,
    torsion_degree,
)
from .strata import (
    CensusTable,
    FactorPair,
    extract_factor,
    multiplication_matrix,
    plant_factor,
    projective_count,
    stratum_census,
    verify_census,
)
from .tpoly import QT, TPoly, parse_tpoly
from .wedge import (
    FamilyPoint,
    WedgeTuple,
    WedgeVector,
    family_limit,
    graph_point,
    wedge_coords,
    wedge_vanishes,
)
from .hodge import (
    BettiReport,
    LambdaPoly,
    PicardReport,
    betti,
    blowup_factor,
    e_blowup_closed,
    e_blowup_recursive,
    e_map_space,
    picard_check,
)
from .ideals import (
    IdealPresentation,
    SymbolicMatrix,
    chart_matrix,
    chart_ring,
    check_minor_extraction,
    check_row_relation,
    find_row_relation,
    groebner_basis,
    ideal_equal,
    minor_ideal,
    staircase_submatrix,
)

__version__ = "0.1.0"
