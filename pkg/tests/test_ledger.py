import pandas as pd
import pytest
import pytest_asyncio

from systems.ledger import ResultsLedger


def sweep_frame(statuses=("PASS", "PASS")):
    return pd.DataFrame(
        {
            'instance': [f"path:{n}" for n in range(1, len(statuses) + 1)],
            'n': list(range(1, len(statuses) + 1)),
            'formula': [1] * len(statuses),
            'solver': [1] * len(statuses),
            'source': ["Thm 2.3: ceil((n+1)/2)"] * len(statuses),
            'status': list(statuses),
        }
    )


@pytest_asyncio.fixture
async def ledger(tmp_path):
    store = ResultsLedger(str(tmp_path / "results.db"))
    await store.setup()
    return store


@pytest.mark.asyncio
async def test_setup_is_idempotent(ledger):
    await ledger.setup()
    assert await ledger.list_runs() == []


@pytest.mark.asyncio
async def test_record_and_fetch(ledger):
    frame = sweep_frame()
    run_id = await ledger.record_sweep("paths", {'max': 2}, frame)
    assert run_id == 1
    rows = await ledger.fetch_rows(run_id)
    pd.testing.assert_frame_equal(rows, frame, check_dtype=False)


@pytest.mark.asyncio
async def test_runs_newest_first(ledger):
    await ledger.record_sweep("paths", {'max': 2}, sweep_frame())
    await ledger.record_sweep("cycles", {'max': 5}, sweep_frame(("PASS", "FAIL")))
    runs = await ledger.list_runs()
    assert [run.sweep for run in runs] == ["cycles", "paths"]
    assert runs[0].passed is False
    assert runs[1].passed is True
    assert runs[0].parameters == '{"max": 5}'
    assert runs[0].row_count == 2
    assert len(await ledger.list_runs(limit=1)) == 1


@pytest.mark.asyncio
async def test_missing_values_stored_as_null(ledger):
    frame = sweep_frame(("PASS",))
    frame['formula'] = [None]
    frame['source'] = [None]
    run_id = await ledger.record_sweep("paths", {}, frame)
    rows = await ledger.fetch_rows(run_id)
    assert rows.loc[0, 'formula'] is None
    assert rows.loc[0, 'source'] is None


@pytest.mark.asyncio
async def test_rejects_incomplete_frame(ledger):
    with pytest.raises(ValueError, match="status"):
        await ledger.record_sweep("paths", {}, sweep_frame().drop(columns=['status']))


@pytest.mark.asyncio
async def test_unknown_run_is_empty(ledger):
    assert (await ledger.fetch_rows(42)).empty
