import pytest

from config import Settings, get_settings
from core.errors import InvalidInputError
from utils.solve_monitor import track_solve


def test_settings_defaults():
    settings = get_settings()
    assert settings == Settings()
    assert settings.max_vertices == 24
    assert settings.enumerate_cap == 1000
    assert settings.default_p is None


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv('PIDOM_ENUMERATE_CAP', '50')
    monkeypatch.setenv('PIDOM_LOG_LEVEL', 'debug')
    monkeypatch.setenv('PIDOM_LOG_FILE', '')
    settings = get_settings(refresh=True)
    assert settings.enumerate_cap == 50
    assert settings.log_level == 'DEBUG'
    assert settings.log_file == ''


def test_settings_are_cached(monkeypatch):
    first = get_settings()
    monkeypatch.setenv('PIDOM_MAX_VERTICES', '10')
    assert get_settings() is first
    assert get_settings(refresh=True).max_vertices == 10


@pytest.mark.parametrize("name, value", [('PIDOM_MAX_VERTICES', 'many'), ('PIDOM_ENUMERATE_CAP', '0')])
def test_bad_settings_rejected(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(InvalidInputError, match=name):
        get_settings(refresh=True)


def test_track_solve_records_results_and_failures(fresh_monitor):
    class Outcome:
        nodes_explored = 7

    @track_solve
    def succeed():
        return Outcome()

    @track_solve
    def fail():
        raise RuntimeError("boom")

    succeed()
    succeed()
    with pytest.raises(RuntimeError):
        fail()
    report = fresh_monitor.report()
    assert report['calls'] == 2
    assert report['total_nodes'] == 14
    assert report['failures'] == 1
    assert report['peak_rss_mb'] > 0
    assert "calls=2" in fresh_monitor.format_report()
