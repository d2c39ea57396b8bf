"""
Report rendering for the twl commands.

A report is a header echoing the command and its configuration, a body, and
a footer with the seed and the verdict.  The body is either a result mapping
(eval, factor, rho, symbol, k2-witness) or an audit table with one row per
family and branch.  Text and JSON renderings are both deterministic.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

import orjson

from ring.auditing import AuditReport

logger = logging.getLogger(__name__)

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2

COLUMNS = ('family', 'branch', 'samples', 'failures', 'skipped')


@dataclass
class CommandReport:
    command: str
    config: dict
    results: dict = field(default_factory=dict)
    audit: Optional[AuditReport] = None
    verdict: Optional[bool] = None

    @property
    def passed(self) -> bool:
        if self.verdict is not None and not self.verdict:
            return False
        return self.audit is None or self.audit.passed

    def to_dict(self) -> dict:
        data = {
            'command': self.command,
            'config': self.config,
            'passed': self.passed,
        }
        if self.results:
            data['results'] = self.results
        if self.audit is not None:
            data['audit'] = self.audit.to_dict()
        return data


def _default(value: Any) -> str:
    return str(value)


def render_json(report: CommandReport) -> bytes:
    return orjson.dumps(report.to_dict(), default=_default, option=JSON_OPTIONS) + b'\n'


def _table(audit: AuditReport) -> list[str]:
    rows = [COLUMNS]
    for row in audit.sorted_rows():
        branch = f'{row.branch} (informational)' if row.informational else row.branch
        rows.append((row.family, branch, str(row.samples), str(row.failures), str(row.skipped)))
    widths = [max(len(row[c]) for row in rows) for c in range(len(COLUMNS))]
    lines = []
    for row in rows:
        cells = [row[c].ljust(widths[c]) if c < 2 else row[c].rjust(widths[c]) for c in range(len(COLUMNS))]
        lines.append('  '.join(cells).rstrip())
    return lines


def _failures(audit: AuditReport) -> list[str]:
    lines = []
    for row in audit.sorted_rows():
        if row.first_failure is None:
            continue
        instance = orjson.dumps(row.first_failure, default=_default, option=orjson.OPT_SORT_KEYS).decode()
        lines.append(f'first failure {row.family}/{row.branch}: {instance}')
    return lines


def render_text(report: CommandReport) -> str:
    header = '  '.join(f'{key}={value}' for key, value in sorted(report.config.items()))
    lines = [f'twl {report.command}', header, '']
    for key in sorted(report.results):
        value = report.results[key]
        if isinstance(value, (dict, list)):
            value = orjson.dumps(value, default=_default, option=orjson.OPT_SORT_KEYS).decode()
        lines.append(f'{key}: {value}')
    if report.audit is not None:
        lines.extend(_table(report.audit))
        lines.extend(_failures(report.audit))
        lines.extend(f'note: {note}' for note in report.audit.notes)
    verdict = 'PASS' if report.passed else 'FAIL'
    lines.extend(['', f"seed={report.config.get('seed', '-')}  verdict={verdict}"])
    return '\n'.join(lines) + '\n'


def write_report(report: CommandReport, path: Path) -> None:
    """Write the JSON rendering for ``*.json`` paths and the text rendering otherwise."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if path.suffix == '.json':
        path.write_bytes(render_json(report))
    else:
        path.write_text(render_text(report), encoding='utf-8')
    logger.info(f"Wrote {report.command} report to {path}")
