"""
Solve Monitor
Tracks wall time, search nodes and process memory across solver calls
"""

import functools
import logging
import time
from typing import Dict, List

import psutil

logger = logging.getLogger(__name__)


class SolveMonitor:
    """Accumulates per-call solver statistics for the current process"""

    def __init__(self):
        self.process = psutil.Process()
        self.reset()

    def reset(self):
        self.calls = 0
        self.failures = 0
        self.total_nodes = 0
        self.durations: List[float] = []
        self.peak_rss_mb = self._rss_mb()

    def _rss_mb(self) -> float:
        try:
            return self.process.memory_info().rss / 1024 / 1024
        except psutil.Error as e:
            logger.error(f"Error reading process memory: {e}")
            return 0.0

    def record(self, duration: float, nodes: int = 0):
        self.calls += 1
        self.total_nodes += nodes
        self.durations.append(duration)
        self.peak_rss_mb = max(self.peak_rss_mb, self._rss_mb())
        # keep the window bounded on long sweeps
        if len(self.durations) > 1000:
            self.durations = self.durations[-500:]

    def record_failure(self):
        self.failures += 1

    def report(self) -> Dict[str, float]:
        total_time = sum(self.durations)
        return {
            'calls': self.calls,
            'failures': self.failures,
            'total_nodes': self.total_nodes,
            'total_seconds': round(total_time, 6),
            'max_seconds': round(max(self.durations, default=0.0), 6),
            'nodes_per_second': round(self.total_nodes / total_time, 1) if total_time > 0 else 0.0,
            'peak_rss_mb': round(self.peak_rss_mb, 2),
        }

    def format_report(self) -> str:
        stats = self.report()
        return " ".join(f"{key}={value}" for key, value in stats.items())


# Global solve monitor
solve_monitor = SolveMonitor()


def track_solve(func):
    """Decorator recording duration and explored nodes of a solver call"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start_time = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception:
            solve_monitor.record_failure()
            raise
        elapsed = time.perf_counter() - start_time
        solve_monitor.record(elapsed, getattr(result, 'nodes_explored', 0))
        logger.debug(f"{func.__name__} finished in {elapsed:.4f}s")
        return result

    return wrapper
