"""
Workbench Configuration
Environment-backed settings; a .env file in the working directory is honoured.
"""

import logging
import os
from dataclasses import dataclass, asdict, replace
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

_LOADED = False
_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")


@dataclass(frozen=True)
class Settings:
    """Resolved runtime settings."""
    cache_dir: Path
    log_level: str
    default_box: int
    seed: int

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        data = asdict(self)
        data['cache_dir'] = str(self.cache_dir)
        return data

    def with_overrides(self, **overrides: Any) -> "Settings":
        """Return a copy with CLI overrides applied (None values are ignored)."""
        clean = {key: value for key, value in overrides.items() if value is not None}
        if 'cache_dir' in clean:
            clean['cache_dir'] = Path(clean['cache_dir'])
        return replace(self, **clean)


def load_settings(env_file: Optional[str] = None) -> Settings:
    """
    Load settings from the environment.

    Args:
        env_file: Optional explicit .env path; the default search is used otherwise

    Returns:
        Settings instance

    Raises:
        ValueError: If a numeric variable cannot be parsed
    """
    global _LOADED
    if env_file is not None:
        load_dotenv(env_file, override=False)
    elif not _LOADED:
        load_dotenv(override=False)
        _LOADED = True

    level = os.getenv("TAUT_LOG_LEVEL", "WARNING").upper()
    if level not in _LEVELS:
        raise ValueError(f"Unknown log level: {level}")

    try:
        box = int(os.getenv("TAUT_DEFAULT_BOX", "12"))
        seed = int(os.getenv("TAUT_SEED", "20240101"))
    except ValueError as exc:
        raise ValueError(f"Invalid numeric setting: {exc}") from exc
    if box < 0:
        raise ValueError(f"TAUT_DEFAULT_BOX must be non-negative, got {box}")

    return Settings(
        cache_dir=Path(os.getenv("TAUT_CACHE_DIR", ".taut_cache")),
        log_level=level,
        default_box=box,
        seed=seed,
    )


def configure_logging(level: str) -> None:
    """Configure the root logger once; records go to stderr."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )
