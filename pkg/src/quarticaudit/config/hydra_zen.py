"""Hydra-zen configuration builders for quarticaudit.

Each profile is a ``builds()`` of ``VerifierConfig`` with its sections
spelled out, so ``instantiate`` yields a validated pydantic model.
"""

from hydra_zen import builds

from .models import (
    ArithmeticConfig,
    ClassGroupConfig,
    DeepCheckConfig,
    ScanConfig,
    VerifierConfig,
)

# =====================================================================
# SECTION PRESETS
# =====================================================================

DefaultArithmetic = builds(
    ArithmeticConfig, trial_division_cap=10**7, form_discriminant_bound=10**8
)

QuickArithmetic = builds(
    ArithmeticConfig, trial_division_cap=10**5, form_discriminant_bound=10**8
)

DefaultClassGroup = builds(
    ClassGroupConfig,
    principal_search_bound=4,
    principal_doublings=2,
    relation_radius=2,
    order_relation_radius=3,
    stable_relations=40,
)

QuickClassGroup = builds(
    ClassGroupConfig,
    principal_search_bound=3,
    principal_doublings=1,
    relation_radius=1,
    order_relation_radius=2,
    stable_relations=20,
)

ThoroughClassGroup = builds(
    ClassGroupConfig,
    principal_search_bound=3,
    principal_doublings=3,
    relation_radius=3,
    order_relation_radius=4,
    stable_relations=120,
)

DefaultDeep = builds(
    DeepCheckConfig,
    hydra_convert="all",
    nine_mod_16_primes=[41, 73, 89, 137],
    one_mod_16_primes=[17, 97, 113],
    deep_max=137,
    unit_field_max=41,
    subfield_max=137,
)

NoDeep = builds(
    DeepCheckConfig,
    hydra_convert="all",
    nine_mod_16_primes=[],
    one_mod_16_primes=[],
    deep_max=0,
    unit_field_max=0,
    subfield_max=0,
)

DefaultScan = builds(ScanConfig, jobs=1, keep_going=False, chunksize=8)

# =====================================================================
# PROFILES
# =====================================================================

DefaultProfile = builds(
    VerifierConfig,
    hydra_convert="all",
    arithmetic=DefaultArithmetic,
    classgroup=DefaultClassGroup,
    deep=DefaultDeep,
    scan=DefaultScan,
)

QuickProfile = builds(
    VerifierConfig,
    hydra_convert="all",
    arithmetic=QuickArithmetic,
    classgroup=QuickClassGroup,
    deep=NoDeep,
    scan=DefaultScan,
)

ThoroughProfile = builds(
    VerifierConfig,
    hydra_convert="all",
    arithmetic=DefaultArithmetic,
    classgroup=ThoroughClassGroup,
    deep=DefaultDeep,
    scan=DefaultScan,
)
