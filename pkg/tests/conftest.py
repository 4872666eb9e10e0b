import pytest

from config import get_settings
from core.generators import generate
from models import FamilySpec
from utils.solve_monitor import solve_monitor


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """Every test sees default settings regardless of the caller's environment"""
    names = (
        'PIDOM_MAX_VERTICES',
        'PIDOM_ENUMERATE_CAP',
        'PIDOM_LOG_LEVEL',
        'PIDOM_LOG_FILE',
        'PIDOM_DB_PATH',
        'PIDOM_DEFAULT_P',
    )
    for name in names:
        monkeypatch.delenv(name, raising=False)
    get_settings(refresh=True)
    yield
    # a test may have set a bad value; clear it before the teardown refresh
    for name in names:
        monkeypatch.delenv(name, raising=False)
    get_settings(refresh=True)


@pytest.fixture
def fresh_monitor():
    solve_monitor.reset()
    yield solve_monitor
    solve_monitor.reset()


@pytest.fixture
def family():
    """Shortcut: family('path:6') -> Graph"""
    return lambda text: generate(FamilySpec.parse(text))
