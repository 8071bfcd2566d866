"""Arithmetic of Q(√p): units, places, forms and ambiguous class numbers."""

from .ambiguous import (
    ExtensionData,
    ambiguous_class_number,
    compute_j,
    eighth_root_witness,
    genus_oracle,
    hilbert_symbol_Q,
    local_norm_symbol_k,
    quartic_field_chain,
    unit_field_chain,
)
from .bqf import ClassNumberResult, Form, ambiguous_classes, class_number, is_h_odd
from .pell import FundUnit, check_unit_congruences, fundamental_unit
from .quadfield import PlaceK, QuadInt, quad_ramified_places

__all__ = [
    "ClassNumberResult",
    "ExtensionData",
    "Form",
    "FundUnit",
    "PlaceK",
    "QuadInt",
    "ambiguous_class_number",
    "ambiguous_classes",
    "check_unit_congruences",
    "class_number",
    "compute_j",
    "eighth_root_witness",
    "fundamental_unit",
    "genus_oracle",
    "hilbert_symbol_Q",
    "is_h_odd",
    "local_norm_symbol_k",
    "quad_ramified_places",
    "quartic_field_chain",
    "unit_field_chain",
]
