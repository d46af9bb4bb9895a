"""Shared pytest fixtures for ordered-locale workbench tests."""

import random

import pytest

from ordered_locale_lab.config import get_settings
from ordered_locale_lab.locales import egli_milner_locale
from ordered_locale_lab.monitoring import configure_logging
from ordered_locale_lab.space import chain3, lvfail, star, vee


@pytest.fixture(autouse=True)
def setup_test_logging():
    """Configure structlog for test output."""
    configure_logging("development")


@pytest.fixture
def fresh_settings():
    """Drop cached settings before and after a test that edits OLAB_* env vars."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    """Seeded generator so property tests are reproducible."""
    return random.Random(20240601)


@pytest.fixture
def chain3_space():
    return chain3()


@pytest.fixture
def chain3_locale(chain3_space):
    """CHAIN3 a ≤ b ≤ c with the Egli–Milner order."""
    return egli_milner_locale(chain3_space)


@pytest.fixture
def vee_locale():
    """VEE x ≤ z, y ≤ z with the Egli–Milner order."""
    return egli_milner_locale(vee())


@pytest.fixture
def star_locale():
    """STAR: the non-open-cone space whose (F−) fails."""
    return egli_milner_locale(star())


@pytest.fixture
def lvfail_locale():
    return egli_milner_locale(lvfail())
