"""Quartic fields: maximal orders, ideals and class groups."""

from .classgroup import (
    Certification,
    ClassGroupResult,
    CyclicSubfieldReport,
    class_group,
    cyclic_subfield,
    quartic_h_mod4,
    unit_field_class_group,
)
from .fixtures import FixtureRecord, FixtureTable, load_fixtures
from .ideals import (
    Ideal,
    PrimeIdealQ,
    factor_prime,
    ideal_mul,
    ideal_norm,
    ideal_pow,
    ideal_reduce_hnf,
    principal_ideal,
)
from .lattice import is_principal
from .order import OrderBasis, dedekind_is_maximal, maximal_order, minkowski_bound

__all__ = [
    "Certification",
    "ClassGroupResult",
    "CyclicSubfieldReport",
    "FixtureRecord",
    "FixtureTable",
    "Ideal",
    "OrderBasis",
    "PrimeIdealQ",
    "class_group",
    "cyclic_subfield",
    "dedekind_is_maximal",
    "factor_prime",
    "ideal_mul",
    "ideal_norm",
    "ideal_pow",
    "ideal_reduce_hnf",
    "is_principal",
    "load_fixtures",
    "maximal_order",
    "minkowski_bound",
    "principal_ideal",
    "quartic_h_mod4",
    "unit_field_class_group",
]
