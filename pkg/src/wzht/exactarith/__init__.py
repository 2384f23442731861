"""Exact polynomial and rational-function arithmetic over Q."""

from .ratfunc import RatFunc, derive, log_derivative, reduce, shift, shift_quotient
from .refine import (
    Factor,
    FactorList,
    direction_composed,
    factor_rational,
    factor_refine,
    separate_k,
    separate_t,
)
from .ring import MultiPoly, VarSpec, poly_str

__all__ = [
    "Factor",
    "FactorList",
    "MultiPoly",
    "RatFunc",
    "VarSpec",
    "derive",
    "direction_composed",
    "factor_rational",
    "factor_refine",
    "log_derivative",
    "poly_str",
    "reduce",
    "separate_k",
    "separate_t",
    "shift",
    "shift_quotient",
]
