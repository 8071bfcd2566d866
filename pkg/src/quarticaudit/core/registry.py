"""Check registry for the per-prime verifier.

Checks register by tag; the verifier runs the registered checks in tag
order and skips those whose preconditions do not hold for the prime.
"""

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ..verify.checks import Check


class CheckRegistry:
    """Registry of check classes keyed by their tag value."""

    _checks: dict[str, type["Check"]] = {}

    @classmethod
    def register(cls, check_class: type["Check"]) -> type["Check"]:
        """Register a check class.

        Raises:
            ValueError: If a check with the same tag is already registered
        """
        name = check_class.tag.value
        if name in cls._checks:
            raise ValueError(f"Check '{name}' is already registered")
        cls._checks[name] = check_class
        return check_class

    @classmethod
    def get(cls, name: str) -> type["Check"]:
        """Get a check class by tag value.

        Raises:
            KeyError: If no check with that tag is registered
        """
        if name not in cls._checks:
            raise KeyError(f"Check '{name}' not registered")
        return cls._checks[name]

    @classmethod
    def is_registered(cls, name: str) -> bool:
        return name in cls._checks

    @classmethod
    def list_checks(cls) -> list[str]:
        """Registered tag values, sorted."""
        return sorted(cls._checks)

    @classmethod
    def clear(cls) -> None:
        """Clear all registered checks (for testing)."""
        cls._checks.clear()
