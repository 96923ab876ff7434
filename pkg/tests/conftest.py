"""
Shared fixtures for the test suite.
"""

import os
from pathlib import Path

import pytest

from src.config import Settings
from src.workbench import Workbench

SMALL_BOX = 4


@pytest.fixture
def box() -> int:
    return SMALL_BOX


@pytest.fixture
def settings(tmp_path: Path) -> Settings:
    return Settings(cache_dir=tmp_path / "cache", log_level="WARNING", default_box=SMALL_BOX, seed=7)


@pytest.fixture
def bench(settings: Settings) -> Workbench:
    return Workbench(settings)


@pytest.fixture
def clean_env(monkeypatch):
    """A private copy of the environment without TAUT_* variables; .env loading writes into it."""
    environ = {k: v for k, v in os.environ.items() if not k.startswith("TAUT_")}
    monkeypatch.setattr(os, "environ", environ)
    return monkeypatch
