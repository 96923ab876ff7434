import logging
from pathlib import Path

import pytest

from src.config import configure_logging, load_settings


def test_defaults(clean_env):
    settings = load_settings()
    assert settings.cache_dir == Path(".taut_cache")
    assert settings.log_level == "WARNING"
    assert settings.default_box == 12
    assert settings.seed == 20240101


def test_environment_overrides(clean_env):
    clean_env.setenv("TAUT_CACHE_DIR", "/tmp/series")
    clean_env.setenv("TAUT_LOG_LEVEL", "debug")
    clean_env.setenv("TAUT_DEFAULT_BOX", "8")
    clean_env.setenv("TAUT_SEED", "3")
    settings = load_settings()
    assert settings.cache_dir == Path("/tmp/series")
    assert settings.log_level == "DEBUG"
    assert settings.default_box == 8
    assert settings.seed == 3


@pytest.mark.parametrize("name, value", [
    ("TAUT_DEFAULT_BOX", "twelve"),
    ("TAUT_DEFAULT_BOX", "-1"),
    ("TAUT_SEED", "1.5"),
    ("TAUT_LOG_LEVEL", "LOUD"),
])
def test_invalid_values_raise(clean_env, name, value):
    clean_env.setenv(name, value)
    with pytest.raises(ValueError):
        load_settings()


def test_env_file_is_read(clean_env, tmp_path):
    env_file = tmp_path / "custom.env"
    env_file.write_text("TAUT_DEFAULT_BOX=5\n", encoding="utf-8")
    assert load_settings(str(env_file)).default_box == 5


def test_overrides_ignore_none(settings):
    updated = settings.with_overrides(cache_dir="elsewhere", seed=None)
    assert updated.cache_dir == Path("elsewhere")
    assert updated.seed == settings.seed
    assert settings.to_dict()['cache_dir'] == str(settings.cache_dir)


def test_configure_logging_sets_root_level():
    configure_logging("info")
    assert logging.getLogger().level == logging.INFO
    configure_logging("WARNING")
