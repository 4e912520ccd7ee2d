"""Pytest configuration and fixtures for thaqkd tests."""

from collections.abc import Iterator
from typing import Any
from unittest.mock import patch

import numpy as np
import pytest

from thaqkd.utils.config import clear_config_cache

TEST_SEED = 20240611


@pytest.fixture(autouse=True)
def no_user_config() -> Iterator[None]:
    """Keep ~/.config/thaqkd.toml and ./thaqkd.toml out of every test.

    Tests that exercise the TOML layer patch run_defaults themselves.
    """
    clear_config_cache()

    def empty(cache: bool = True) -> dict[str, Any]:
        return {}

    with patch("thaqkd.runconfig.run_defaults", empty):
        yield
    clear_config_cache()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so random tests are reproducible.

    Returns:
        numpy Generator seeded with TEST_SEED
    """
    return np.random.default_rng(TEST_SEED)
