import pytest

from commands.table import COLUMNS, SWEEPS, run_sweep, sweep_passed


@pytest.mark.parametrize(
    "name, maximum, rows",
    [
        ("paths", 5, 5),
        ("cycles", 6, 4),
        ("p2pn", 4, 4),
        ("kmkn", 3, 3),
        ("italian-p2pn", 3, 3),
        ("induced", 4, 8),
        ("structure", 6, 8),
    ],
)
def test_small_sweeps_pass(name, maximum, rows):
    frame = run_sweep(name, maximum)
    assert list(frame.columns) == COLUMNS
    assert len(frame) == rows
    assert sweep_passed(frame)


def test_multipartite_sweep_respects_total():
    frame = run_sweep("multipartite", 8)
    assert frame['n'].max() <= 8
    assert "multipartite:3,3" in set(frame['instance'])
    assert sweep_passed(frame)


def test_roman_sweep_reports_both_values():
    frame = run_sweep("roman", 3)
    assert len(frame) == 6
    assert set(frame['source']) == {"equal-odd", "pair-gadget"}
    assert sweep_passed(frame)


def test_roman_sweep_skips_graphs_above_guard(monkeypatch):
    from config import get_settings

    monkeypatch.setenv('PIDOM_MAX_VERTICES', '8')
    get_settings(refresh=True)
    frame = run_sweep("roman", 3)
    # the 9-vertex pair gadget for a = 5 is left out
    assert len(frame) == 4


def test_failure_detected():
    frame = run_sweep("paths", 3)
    frame.loc[0, 'status'] = 'FAIL'
    assert not sweep_passed(frame)


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SWEEPS))
def test_default_sweeps_pass(name):
    assert sweep_passed(run_sweep(name))
