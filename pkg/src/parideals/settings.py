"""Application-wide configuration using *Pydantic* settings.

Defaults come from the optional ``parideals.ini`` (see :mod:`parideals.config`);
environment variables with the ``PARIDEALS_`` prefix override them, e.g.
``PARIDEALS_THREADS=4`` caps the census worker pool.
"""

from __future__ import annotations

from typing import Any, Dict, Optional

try:
    from pydantic_settings import BaseSettings, SettingsConfigDict
except ImportError:  # pragma: no cover – pydantic-settings is a declared dependency
    from pydantic import BaseSettings  # type: ignore

    SettingsConfigDict = dict  # type: ignore

from pydantic import field_validator

try:
    from .config import _config
except ImportError:  # pragma: no cover
    _config: Dict[str, Any] = {}  # type: ignore[no-redef]


class AppSettings(BaseSettings):
    """Typed settings pulled from environment variables or the INI file."""

    model_config = SettingsConfigDict(env_prefix="PARIDEALS_")

    # 0 lets ThreadPoolExecutor pick its default worker count
    threads: int = _config.get("threads", 0)

    # output format for the CLI
    format: str = _config.get("format", "pretty")

    verbose: bool = _config.get("verbose", False)

    @field_validator("threads")
    @classmethod
    def _non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("threads must be >= 0")
        return value

    @field_validator("format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        value = value.lower()
        if value not in ("pretty", "json", "csv"):
            raise ValueError(f"unknown output format: {value}")
        return value

    @property
    def max_workers(self) -> Optional[int]:
        """Worker cap for :class:`~concurrent.futures.ThreadPoolExecutor`."""
        return self.threads or None


# Singleton instance – import this from other modules
settings = AppSettings()
