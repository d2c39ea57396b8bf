"""
Shared harness for the randomized relation audits.

Each sample draws from its own ``random.Random`` seeded with
``"{seed}:{family}:{index}"``; samples may therefore be evaluated on a
thread pool in any order and still merge into the same report.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .exceptions import TwlError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Outcome:
    """Result of checking one relation instance."""
    branch: str
    passed: bool
    instance: dict = field(default_factory=dict)
    skipped: bool = False
    informational: bool = False


@dataclass
class BranchResult:
    family: str
    branch: str
    samples: int = 0
    failures: int = 0
    skipped: int = 0
    informational: bool = False
    first_failure: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            'family': self.family,
            'branch': self.branch,
            'samples': self.samples,
            'failures': self.failures,
            'skipped': self.skipped,
            'informational': self.informational,
            'first_failure': self.first_failure,
        }


@dataclass
class AuditReport:
    """Per-family, per-branch tallies of an audit run."""
    seed: int
    rows: dict[tuple[str, str], BranchResult] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def record(self, family: str, outcome: Outcome) -> None:
        key = (family, outcome.branch)
        row = self.rows.setdefault(
            key, BranchResult(family, outcome.branch, informational=outcome.informational))
        if outcome.skipped:
            row.skipped += 1
            return
        row.samples += 1
        if not outcome.passed:
            row.failures += 1
            if row.first_failure is None:
                row.first_failure = outcome.instance

    def merge(self, other: 'AuditReport') -> 'AuditReport':
        for key, row in other.rows.items():
            mine = self.rows.setdefault(
                key, BranchResult(row.family, row.branch, informational=row.informational))
            mine.samples += row.samples
            mine.failures += row.failures
            mine.skipped += row.skipped
            if mine.first_failure is None:
                mine.first_failure = row.first_failure
        self.notes.extend(note for note in other.notes if note not in self.notes)
        return self

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    @property
    def passed(self) -> bool:
        return all(row.failures == 0 for row in self.rows.values() if not row.informational)

    @property
    def total_failures(self) -> int:
        return sum(row.failures for row in self.rows.values() if not row.informational)

    def sorted_rows(self) -> list[BranchResult]:
        return [self.rows[key] for key in sorted(self.rows)]

    def to_dict(self) -> dict:
        return {
            'seed': self.seed,
            'passed': self.passed,
            'rows': [row.to_dict() for row in self.sorted_rows()],
            'notes': list(self.notes),
        }


SampleCheck = Callable[[random.Random, int], Iterable[Outcome]]


def sample_rng(seed: int, family: str, index: int) -> random.Random:
    return random.Random(f"{seed}:{family}:{index}")


def run_family(family: str, check: SampleCheck, samples: int, seed: int,
               workers: int = 1, report: Optional[AuditReport] = None) -> AuditReport:
    """Run ``check`` on ``samples`` seeded instances and tally the outcomes."""
    report = report if report is not None else AuditReport(seed=seed)

    def evaluate(index: int) -> list[Outcome]:
        rng = sample_rng(seed, family, index)
        try:
            return list(check(rng, index))
        except TwlError as e:
            logger.error(f"{family} sample {index} raised {type(e).__name__}: {e}")
            return [Outcome('error', False, {'index': index, 'error': f"{type(e).__name__}: {e}"})]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(evaluate, range(samples)))
    else:
        results = [evaluate(index) for index in range(samples)]

    for index, outcomes in enumerate(results):
        for outcome in outcomes:
            if not outcome.passed and not outcome.skipped and not outcome.informational:
                logger.warning(f"{family}/{outcome.branch} failed on sample {index}")
            report.record(family, outcome)
    logger.info(f"Audited {family}: {samples} samples, seed {seed}")
    return report
