"""Unit tests for QA_* environment settings."""

from pathlib import Path

import pytest

from quarticaudit.config.settings import get_settings


@pytest.mark.unit
class TestSettings:
    """Test environment and .env overrides."""

    def test_defaults(self, tmp_path, monkeypatch):
        """No fixtures, the default profile, warnings only."""
        monkeypatch.chdir(tmp_path)
        settings = get_settings()

        assert settings.fixtures is None
        assert settings.profile == "default"
        assert settings.log_level == "WARNING"

    def test_environment(self, tmp_path, monkeypatch):
        """QA_* variables override the defaults."""
        monkeypatch.chdir(tmp_path)
        monkeypatch.setenv("QA_FIXTURES", "/data/oracle.csv")
        monkeypatch.setenv("QA_PROFILE", "quick")
        monkeypatch.setenv("QA_LOG_LEVEL", "DEBUG")
        settings = get_settings()

        assert settings.fixtures == Path("/data/oracle.csv")
        assert settings.profile == "quick"
        assert settings.log_level == "DEBUG"

    def test_dotenv(self, tmp_path, monkeypatch):
        """A local .env file is read."""
        monkeypatch.chdir(tmp_path)
        (tmp_path / ".env").write_text("QA_PROFILE=thorough\n", encoding="utf-8")

        assert get_settings().profile == "thorough"

    def test_fresh_each_call(self, tmp_path, monkeypatch):
        """Settings are not cached across environment changes."""
        monkeypatch.chdir(tmp_path)
        assert get_settings().profile == "default"

        monkeypatch.setenv("QA_PROFILE", "quick")
        assert get_settings().profile == "quick"
