"""Elliptic curves with many integral multiples of (0, 0), and self-descriptive numbers."""
from .curve import (O, Affine, Curve, Line, ReductionResult, SingularCurveError, add, double,
                    is_integral, is_nonsingular, map_point, negate, on_curve, point, reduce,
                    scalar_mul, scale, shear)
from .families import FamilyCurve, FamilyRejected, family2, family3, family4, family5, family8
from .search import CandidateRecord, SearchConfig, integral_multiples, rank_records, run_search

__version__ = "0.1.0"
