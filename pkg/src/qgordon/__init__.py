"""Exact q-series machinery for Gordon-type partition identities with divisibility conditions."""

from .gordon import (
    Family,
    GordonParams,
    Legacy,
    ParamDomain,
    TermKind,
    Variant,
    legacy_rhs,
    product_rhs,
    series_C,
    series_T,
    valid_params,
)
from .partitions import ANY, ConstraintSet, FrequencyProfile, Parity, brute_count, dp_counts, dp_genfun, residue_genfun
from .report import CheckReport, Mismatch
from .series import (
    INFINITE,
    BiSeries,
    LaurentSeries,
    Monomial,
    evaluate_x,
    invert_unit,
    pochhammer,
    qpochhammer,
    theta_sum,
)

__version__ = "0.1.0"
