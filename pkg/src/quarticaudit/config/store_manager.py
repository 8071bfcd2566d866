"""Profile store: named VerifierConfig presets registered with hydra-zen.

The store is set up explicitly (``setup_store``) and can be reset between
tests; unknown profile names raise ConfigError with close-match
suggestions.
"""

import logging
from typing import Any

from hydra.errors import InstantiationException
from hydra_zen import ZenStore, instantiate
from pydantic import ValidationError

from ..core.errors import ConfigError
from .models import VerifierConfig

logger = logging.getLogger(__name__)

PROFILE_GROUP = "profile"


class ProfileStore:
    """Registry of configuration profiles backed by a ZenStore."""

    _initialized: bool = False
    _zen_store: ZenStore | None = None

    @classmethod
    def setup_store(cls, force: bool = False) -> None:
        """Register the built-in profiles.

        Args:
            force: If True, reinitialize even if already initialized
        """
        if cls._initialized and not force:
            logger.debug("Profile store already initialized, skipping")
            return

        from .hydra_zen import DefaultProfile, QuickProfile, ThoroughProfile

        if force or cls._zen_store is None:
            cls._zen_store = ZenStore(name="quarticaudit", overwrite_ok=True)
        for name, node in (
            ("default", DefaultProfile),
            ("quick", QuickProfile),
            ("thorough", ThoroughProfile),
        ):
            cls.register(name, node)
        cls._initialized = True
        logger.debug("Profile store initialized with %s", cls.list_profiles())

    @classmethod
    def register(cls, name: str, node: Any) -> None:
        """Register a ``builds(VerifierConfig, ...)`` node under a profile name."""
        if cls._zen_store is None:
            cls._zen_store = ZenStore(name="quarticaudit", overwrite_ok=True)
        cls._zen_store(node, name=name, group=PROFILE_GROUP)

    @classmethod
    def list_profiles(cls) -> list[str]:
        cls.setup_store()
        assert cls._zen_store is not None
        # store[group] maps (group, name) to the stored node
        return sorted(name for _, name in cls._zen_store[PROFILE_GROUP])

    @classmethod
    def resolve(cls, name: str) -> VerifierConfig:
        """Instantiate the named profile.

        Raises:
            ConfigError: unknown name, or a profile that fails validation
        """
        names = cls.list_profiles()
        if name not in names:
            raise ConfigError(
                issue=f"Unknown profile '{name}'",
                config_key=name,
                valid_options=names,
            )
        assert cls._zen_store is not None
        try:
            config = instantiate(cls._zen_store[PROFILE_GROUP, name])
        except (ValidationError, InstantiationException) as e:
            raise ConfigError(issue=f"Profile '{name}' is invalid: {e}") from e
        if not isinstance(config, VerifierConfig):
            raise ConfigError(issue=f"Profile '{name}' does not build a VerifierConfig")
        return config

    @classmethod
    def is_initialized(cls) -> bool:
        return cls._initialized

    @classmethod
    def get_zen_store(cls) -> ZenStore | None:
        return cls._zen_store

    @classmethod
    def reset_for_testing(cls) -> None:
        """Reset store state for testing."""
        cls._initialized = False
        cls._zen_store = None
        logger.debug("Profile store reset for testing")
