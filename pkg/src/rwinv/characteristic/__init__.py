"""Exact characteristic-number relations for compact hyperkaehler manifolds."""

from .bounds import (
    GUAN_MAX_B2,
    GUAN_MAX_B3,
    Bound,
    b2_bound_dim6,
    bounds_dim4,
    bounds_dim6,
    jiang_b2_bound,
    jiang_theta3_bound,
    lattice_step,
    min_admissible_theta3,
    theta3_upper_bound_dim6,
)
from .formulas import (
    AHAT_SQRT,
    CHERN_LABELS,
    LEMMA_SIX_VALUE,
    RW_FORMULAS,
    RW_LABELS,
    BettiData,
    ChernData,
    DimensionError,
    RWValues,
    ahat_sqrt_integral,
    b2_inequality_margin,
    b_theta_n_from_ahat,
    chern_from_betti_dim4,
    chern_from_chi_dim6,
    fujiki_q_constants,
    lemma_six_check,
    power_sum_classes,
    rw_from_betti_dim4,
    rw_from_chern,
    s_class_consistency,
    theta_theta2_relation,
    todd4_identity_check,
)
from .hodge import (
    K3_DIAMOND,
    OG6_DIAMOND,
    ChiVector,
    DiamondError,
    HodgeDiamond,
    chi_from_hodge,
    diamond_from_rows,
)
from .tables import GOLDEN, TableReport, verify_known_tables

__all__ = [
    "GOLDEN",
    "TableReport",
    "verify_known_tables",
    "GUAN_MAX_B2",
    "GUAN_MAX_B3",
    "Bound",
    "b2_bound_dim6",
    "bounds_dim4",
    "bounds_dim6",
    "jiang_b2_bound",
    "jiang_theta3_bound",
    "lattice_step",
    "min_admissible_theta3",
    "theta3_upper_bound_dim6",
    "AHAT_SQRT",
    "CHERN_LABELS",
    "LEMMA_SIX_VALUE",
    "RW_FORMULAS",
    "RW_LABELS",
    "BettiData",
    "ChernData",
    "DimensionError",
    "RWValues",
    "ahat_sqrt_integral",
    "b2_inequality_margin",
    "b_theta_n_from_ahat",
    "chern_from_betti_dim4",
    "chern_from_chi_dim6",
    "fujiki_q_constants",
    "lemma_six_check",
    "power_sum_classes",
    "rw_from_betti_dim4",
    "rw_from_chern",
    "s_class_consistency",
    "theta_theta2_relation",
    "todd4_identity_check",
    "K3_DIAMOND",
    "OG6_DIAMOND",
    "ChiVector",
    "DiamondError",
    "HodgeDiamond",
    "chi_from_hodge",
    "diamond_from_rows",
]
