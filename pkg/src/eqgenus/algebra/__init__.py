"""Exact scalar and symbolic arithmetic."""

from .cyclotomic import CycNumber, cyclotomic_poly, euler_phi, level_y
from .laurent import (
    LaurentPoly,
    RationalFunction,
    poly_gcd,
    rf_is_constant,
    rf_limit_at_infinity,
    rf_monomial_constant,
)
from .nilpoly import POINT_RING, GradedRing, NilPoly, evaluate_series, nil_exp, nil_invert
from .qseries import QSeries
from .scalars import as_fraction, coords, inverse
from .ypoly import YPoly

__all__ = [
    "CycNumber",
    "GradedRing",
    "LaurentPoly",
    "NilPoly",
    "POINT_RING",
    "QSeries",
    "RationalFunction",
    "YPoly",
    "as_fraction",
    "coords",
    "cyclotomic_poly",
    "euler_phi",
    "evaluate_series",
    "inverse",
    "level_y",
    "nil_exp",
    "nil_invert",
    "poly_gcd",
    "rf_is_constant",
    "rf_limit_at_infinity",
    "rf_monomial_constant",
]
