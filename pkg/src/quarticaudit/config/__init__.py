"""Configuration: pydantic models, environment settings and hydra-zen profiles."""

from .models import (
    ArithmeticConfig,
    ClassGroupConfig,
    DeepCheckConfig,
    ScanConfig,
    VerifierConfig,
)
from .settings import QuarticAuditSettings, get_settings
from .store_manager import ProfileStore

__all__ = [
    "ArithmeticConfig",
    "ClassGroupConfig",
    "DeepCheckConfig",
    "ProfileStore",
    "QuarticAuditSettings",
    "ScanConfig",
    "VerifierConfig",
    "get_settings",
]
