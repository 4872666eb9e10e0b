"""
Runtime settings loaded from the environment
"""

import os
import logging
from dataclasses import dataclass
from typing import Optional

from core.errors import InvalidInputError

logger = logging.getLogger(__name__)


def _int_env(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(f"{name} must be an integer, got '{raw}'") from None


@dataclass(frozen=True)
class Settings:
    """Tunables for the solver, logging and the results ledger"""

    max_vertices: int = 24
    enumerate_cap: int = 1000
    log_level: str = "INFO"
    log_file: str = "pidom.log"
    db_path: str = "pidom_results.db"
    default_p: Optional[int] = None

    @classmethod
    def from_env(cls) -> "Settings":
        settings = cls(
            max_vertices=_int_env("PIDOM_MAX_VERTICES", 24),
            enumerate_cap=_int_env("PIDOM_ENUMERATE_CAP", 1000),
            log_level=os.getenv("PIDOM_LOG_LEVEL", "INFO").upper(),
            log_file=os.getenv("PIDOM_LOG_FILE", "pidom.log"),
            db_path=os.getenv("PIDOM_DB_PATH", "pidom_results.db"),
            default_p=_int_env("PIDOM_DEFAULT_P", None),
        )
        if settings.max_vertices < 1:
            raise InvalidInputError("PIDOM_MAX_VERTICES must be positive")
        if settings.enumerate_cap < 1:
            raise InvalidInputError("PIDOM_ENUMERATE_CAP must be positive")
        if settings.default_p is not None and settings.default_p < 1:
            raise InvalidInputError("PIDOM_DEFAULT_P must be positive")
        return settings


_settings: Optional[Settings] = None


def get_settings(refresh: bool = False) -> Settings:
    """Return the process-wide settings, reading the environment once"""
    global _settings
    if _settings is None or refresh:
        _settings = Settings.from_env()
        logger.debug(f"Loaded settings: {_settings}")
    return _settings
