"""Test version information."""

import pytest

from quarticaudit import __description__, __version__


@pytest.mark.unit
def test_version_defined():
    """Test that version is properly defined."""
    assert isinstance(__version__, str)
    assert __version__ == "0.1.0"


@pytest.mark.unit
def test_version_format():
    """Test that version follows semantic versioning."""
    parts = __version__.split(".")
    assert len(parts) == 3
    for part in parts:
        assert part.isdigit()


@pytest.mark.unit
def test_description():
    """The package describes itself."""
    assert "quartic" in __description__
