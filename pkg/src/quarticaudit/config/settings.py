"""Environment settings for quarticaudit.

Read from ``QA_*`` environment variables (and a local ``.env`` if present).
Explicit CLI flags take precedence over these.
"""

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class QuarticAuditSettings(BaseSettings):
    """Process-level settings: oracle fixtures, profile and log level."""

    model_config = SettingsConfigDict(
        env_prefix="QA_", env_file=".env", extra="ignore"
    )

    fixtures: Path | None = Field(
        default=None, description="Oracle class number fixture file"
    )
    profile: str = Field(default="default", description="Configuration profile name")
    log_level: str = Field(default="WARNING", description="Log level for stderr output")


def get_settings() -> QuarticAuditSettings:
    """Fresh settings from the current environment."""
    return QuarticAuditSettings()
