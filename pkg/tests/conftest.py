"""Test configuration for quarticaudit.

Shared fixtures: clean registries between tests, ready-made configurations,
the small fields the arithmetic tests lean on, and hand-built reports for
the rendering tests.
"""

import logging

import pytest

from quarticaudit.arith.pell import FundUnit
from quarticaudit.config.models import ClassGroupConfig, DeepCheckConfig, VerifierConfig
from quarticaudit.config.store_manager import ProfileStore
from quarticaudit.core.chain import Verdict
from quarticaudit.core.registry import CheckRegistry
from quarticaudit.quartic.order import OrderBasis, maximal_order, pure_quartic
from quarticaudit.verify.models import CheckRecord, CheckTag, ProofChainReport

logging.basicConfig(level=logging.DEBUG)
logger = logging.getLogger(__name__)


@pytest.fixture(autouse=True)
def clean_store():
    """Reset the profile store and the check registry around each test."""
    ProfileStore.reset_for_testing()
    CheckRegistry.clear()
    logger.debug("Profile store and check registry reset before test")

    yield

    ProfileStore.reset_for_testing()
    CheckRegistry.clear()


@pytest.fixture
def initialized_store():
    """A profile store with the built-in profiles registered."""
    ProfileStore.setup_store()
    yield ProfileStore
    ProfileStore.reset_for_testing()


@pytest.fixture(autouse=True)
def no_fixture_env(monkeypatch):
    """Keep a developer's QA_* environment out of the tests."""
    for name in ("QA_FIXTURES", "QA_PROFILE", "QA_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


# ============================================================================
# Configuration Fixtures
# ============================================================================


@pytest.fixture
def default_config():
    """The default VerifierConfig."""
    return VerifierConfig()


@pytest.fixture
def shallow_config():
    """Deep checks switched off entirely."""
    return VerifierConfig(
        deep=DeepCheckConfig(
            nine_mod_16_primes=[],
            one_mod_16_primes=[],
            deep_max=0,
            unit_field_max=0,
            subfield_max=0,
        )
    )


@pytest.fixture
def small_classgroup_config():
    """Tight relation limits for the tiny fields used in unit tests."""
    return ClassGroupConfig(
        principal_search_bound=3,
        principal_doublings=1,
        relation_radius=1,
        order_relation_radius=2,
        stable_relations=10,
    )


# ============================================================================
# Prime Fixtures
# ============================================================================


@pytest.fixture
def nine_mod_16_primes():
    """Primes ≡ 9 (mod 16) below 150."""
    return [41, 73, 89, 137]


@pytest.fixture
def one_mod_16_primes():
    """Primes ≡ 1 (mod 16) below 150."""
    return [17, 97, 113]


@pytest.fixture
def known_units():
    """Fundamental units a + b√p of norm −1, checked by hand."""
    return {
        5: (2, 1),
        13: (18, 5),
        17: (4, 1),
        41: (32, 5),
        73: (1068, 125),
        89: (500, 53),
    }


# ============================================================================
# Field Fixtures
# ============================================================================


@pytest.fixture(scope="session")
def order_two() -> OrderBasis:
    """Maximal order of Q(2^(1/4)): Z[θ], disc −2048, class number 1."""
    return maximal_order((-2, 0, 0, 0, 1))


@pytest.fixture(scope="session")
def order_41() -> OrderBasis:
    """Maximal order of Q(41^(1/4)), strictly larger than Z[θ]."""
    return maximal_order(pure_quartic(41))


# ============================================================================
# Report Fixtures
# ============================================================================


@pytest.fixture
def passing_report() -> ProofChainReport:
    """A hand-built passing report for p = 41."""
    checks = [
        CheckRecord(
            tag=CheckTag.NORM_MINUS_ONE,
            verdict=Verdict.PASS,
            witness={"a": "32", "b": "5", "norm": "-1"},
        ),
        CheckRecord(
            tag=CheckTag.RESIDUE_ORDER_FOUR,
            verdict=Verdict.PASS,
            witness={"a_mod_p": "32", "order": "4"},
        ),
        CheckRecord(
            tag=CheckTag.UNIT_CONGRUENCES,
            verdict=Verdict.INCONCLUSIVE,
            note="cofactor left unfactored",
        ),
    ]
    checks.sort(key=lambda c: c.tag.position)
    return ProofChainReport(
        p=41,
        class_mod16=9,
        unit=FundUnit(p=41, a=32, b=5),
        checks=checks,
        overall=Verdict.PASS,
    )
