import numpy as np
import pytest

from rainbow_schur.config.settings import settings


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Keep log files inside the test's tmp dir and the console quiet."""
    monkeypatch.setattr(settings, "LOGS_DIR", tmp_path / "logs")
    monkeypatch.setattr(settings, "LOG_LEVEL", "ERROR")


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
