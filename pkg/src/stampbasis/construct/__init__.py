"""Constructions of bases with prescribed orders and essential subsets."""
from .formulas import (
    formula_e_upper,
    formula_f,
    formula_f_k1,
    kth_root_partial_sum,
    primorial_lower_bound,
)
from .represent import RepresentationPlan, represent, threshold
from .section3 import Section3Plan, build_section3
from .thm44 import Thm44Basis, build_thm44, sweep

__all__ = [
    "RepresentationPlan",
    "Section3Plan",
    "Thm44Basis",
    "build_section3",
    "build_thm44",
    "formula_e_upper",
    "formula_f",
    "formula_f_k1",
    "kth_root_partial_sum",
    "primorial_lower_bound",
    "represent",
    "sweep",
    "threshold",
]
