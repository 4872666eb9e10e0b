"""
Results Ledger Database
"""

import json
import logging
from datetime import datetime
from typing import Dict, List, Optional

import aiosqlite
import pandas as pd

from models import SweepRun

logger = logging.getLogger(__name__)

ROW_COLUMNS = ['instance', 'n', 'formula', 'solver', 'source', 'status']


class ResultsLedger:
    """Stores recorded table sweeps so runs can be compared later"""

    def __init__(self, db_path: str):
        self.db_path = db_path

    async def setup(self):
        """Create the ledger tables if they do not exist yet"""
        async with aiosqlite.connect(self.db_path) as db:
            await db.execute('''
                CREATE TABLE IF NOT EXISTS sweep_runs (
                    run_id INTEGER PRIMARY KEY AUTOINCREMENT,
                    sweep TEXT NOT NULL,
                    parameters TEXT NOT NULL,
                    started_at TIMESTAMP NOT NULL,
                    passed BOOLEAN NOT NULL,
                    row_count INTEGER NOT NULL
                )
            ''')
            await db.execute('''
                CREATE TABLE IF NOT EXISTS sweep_rows (
                    run_id INTEGER NOT NULL,
                    row_index INTEGER NOT NULL,
                    instance TEXT NOT NULL,
                    n INTEGER NOT NULL,
                    formula INTEGER,
                    solver INTEGER,
                    source TEXT,
                    status TEXT NOT NULL,
                    PRIMARY KEY (run_id, row_index),
                    FOREIGN KEY (run_id) REFERENCES sweep_runs(run_id)
                )
            ''')
            await db.commit()
            logger.debug(f"Ledger tables ready in {self.db_path}")

    async def record_sweep(self, sweep: str, parameters: Dict, frame: pd.DataFrame) -> int:
        """Insert one sweep and its rows, returning the new run id"""
        missing = [column for column in ROW_COLUMNS if column not in frame.columns]
        if missing:
            raise ValueError(f"sweep frame lacks columns {missing}")
        passed = bool((frame['status'] == 'PASS').all())
        async with aiosqlite.connect(self.db_path) as db:
            cursor = await db.execute(
                'INSERT INTO sweep_runs (sweep, parameters, started_at, passed, row_count) VALUES (?, ?, ?, ?, ?)',
                (sweep, json.dumps(parameters, sort_keys=True), datetime.now().isoformat(), passed, len(frame)),
            )
            run_id = cursor.lastrowid
            rows = [
                (
                    run_id,
                    index,
                    str(row.instance),
                    int(row.n),
                    None if pd.isna(row.formula) else int(row.formula),
                    None if pd.isna(row.solver) else int(row.solver),
                    None if pd.isna(row.source) else str(row.source),
                    str(row.status),
                )
                for index, row in enumerate(frame[ROW_COLUMNS].itertuples(index=False))
            ]
            await db.executemany(
                'INSERT INTO sweep_rows (run_id, row_index, instance, n, formula, solver, source, status) '
                'VALUES (?, ?, ?, ?, ?, ?, ?, ?)',
                rows,
            )
            await db.commit()
        logger.info(f"Recorded sweep '{sweep}' as run {run_id} ({len(frame)} rows, passed={passed})")
        return run_id

    async def list_runs(self, limit: Optional[int] = 20) -> List[SweepRun]:
        """Most recent runs first"""
        query = 'SELECT run_id, sweep, parameters, started_at, passed, row_count FROM sweep_runs ORDER BY run_id DESC'
        params = ()
        if limit is not None:
            query += ' LIMIT ?'
            params = (limit,)
        async with aiosqlite.connect(self.db_path) as db:
            cursor = await db.execute(query, params)
            records = await cursor.fetchall()
        return [
            SweepRun(
                run_id=record[0],
                sweep=record[1],
                parameters=record[2],
                started_at=record[3],
                passed=bool(record[4]),
                row_count=record[5],
            )
            for record in records
        ]

    async def fetch_rows(self, run_id: int) -> pd.DataFrame:
        async with aiosqlite.connect(self.db_path) as db:
            cursor = await db.execute(
                'SELECT instance, n, formula, solver, source, status FROM sweep_rows '
                'WHERE run_id = ? ORDER BY row_index',
                (run_id,),
            )
            records = await cursor.fetchall()
        return pd.DataFrame(records, columns=ROW_COLUMNS)
