"""
Resource usage of a twl command: wall time, CPU time and resident memory.

The figures are logged and echoed by the commands; they never enter a report
file, which must stay byte-identical between runs.
"""

import logging
import time
from dataclasses import asdict, dataclass
from typing import Optional

import psutil

logger = logging.getLogger(__name__)


@dataclass
class ResourceUsage:
    """What one command cost."""
    elapsed_seconds: float
    cpu_seconds: float
    rss_mb: float
    peak_rss_mb: float

    def to_dict(self) -> dict:
        return asdict(self)

    def summary(self) -> str:
        return (f"elapsed {self.elapsed_seconds:.2f}s, cpu {self.cpu_seconds:.2f}s, "
                f"rss {self.rss_mb:.1f} MB (peak {self.peak_rss_mb:.1f} MB)")


class ResourceMonitor:
    """Context manager sampling the current process around a command."""

    def __init__(self, label: str):
        self.label = label
        self.process = psutil.Process()
        self.usage: Optional[ResourceUsage] = None
        self._start = 0.0
        self._cpu_start = 0.0
        self._peak = 0

    def _cpu(self) -> float:
        times = self.process.cpu_times()
        return times.user + times.system

    def _rss(self) -> int:
        rss = self.process.memory_info().rss
        self._peak = max(self._peak, rss)
        return rss

    def sample(self) -> None:
        """Record the memory high-water mark between start and stop."""
        try:
            self._rss()
        except psutil.Error as e:
            logger.warning(f"Could not sample memory for {self.label}: {e}")

    def __enter__(self) -> 'ResourceMonitor':
        self._start = time.perf_counter()
        try:
            self._cpu_start = self._cpu()
            self._rss()
        except psutil.Error as e:
            logger.warning(f"Could not read process counters for {self.label}: {e}")
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        elapsed = time.perf_counter() - self._start
        try:
            cpu = self._cpu() - self._cpu_start
            rss = self._rss()
        except psutil.Error as e:
            logger.error(f"Error collecting resource usage for {self.label}: {e}")
            cpu, rss = 0.0, 0
        mb = 1024 * 1024
        self.usage = ResourceUsage(elapsed, cpu, rss / mb, self._peak / mb)
        logger.info(f"{self.label}: {self.usage.summary()}")
