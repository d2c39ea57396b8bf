"""
Dispatch of audit families to the app that owns them.

A selector is a family name (``R4``, ``TT2``, ``P5'``, ``commute``, ...) or a
group: ``R``, ``ST``, ``P``, ``Q``, ``bruhat``, ``extension`` or ``all``.
Families are run in selector order and merged into one report.
"""

import logging
from typing import Callable, Optional, Sequence

import orjson
import structlog

from bruhat.audits import BRUHAT_FAMILIES, audit_bruhat, corpus_words
from extension.audits import EXTENSION_FAMILIES, audit_extension
from linear.generators import GroupWord
from linear.relations import RELATION_FAMILIES, audit_R
from ring.auditing import AuditReport
from ring.exceptions import ConfigurationError
from ring.scalars import DivisionRing
from steinberg.audits import STEINBERG_FAMILIES, audit_steinberg
from symbols.audits import GENERAL_FAMILIES, SYMBOL_FAMILIES, SYMPLECTIC_FAMILIES, audit_symbols
from symbols.words import tame_supported

from .config import RunConfig
from .parsing import ELEMENTARY, parse_word

logger = logging.getLogger(__name__)
events = structlog.get_logger(__name__)

FamilyRunner = Callable[[str, DivisionRing, RunConfig, AuditReport], AuditReport]


def _relations(family, ring, config, report):
    return audit_R(family, ring, config.n, config.samples, config.seed, config.degree_cap,
                   config.workers, report)


def _steinberg(family, ring, config, report):
    return audit_steinberg(family, ring, config.n, config.samples, config.seed, config.degree_cap,
                           config.workers, report)


def _symbols(family, ring, config, report):
    return audit_symbols(family, ring, config.samples, config.seed, config.degree_cap, config.workers, report)


def _extension(family, ring, config, report):
    return audit_extension(family, ring, config.n, config.samples, config.seed, config.degree_cap,
                           walk_length=max(1, config.word_length // 2), workers=config.workers, report=report)


OWNERS: dict[str, FamilyRunner] = {}
OWNERS.update({family: _relations for family in RELATION_FAMILIES})
OWNERS.update({family: _steinberg for family in STEINBERG_FAMILIES})
OWNERS.update({family: _symbols for family in SYMBOL_FAMILIES})
OWNERS.update({family: _extension for family in EXTENSION_FAMILIES})


def resolve_families(selectors: Sequence[str], n: int, ring: DivisionRing) -> list[str]:
    """Expand group selectors; families a group cannot run at this n or ring are left out."""
    groups = {
        'R': list(RELATION_FAMILIES),
        'ST': [f for f in STEINBERG_FAMILIES if n >= 3 or not f.startswith('TT')],
        'P': list(SYMPLECTIC_FAMILIES),
        'Q': list(GENERAL_FAMILIES),
        'bruhat': list(BRUHAT_FAMILIES),
        'extension': list(EXTENSION_FAMILIES),
    }
    symbol_laws = ['steinberg'] if tame_supported(ring) else []
    groups['all'] = (groups['R'] + groups['ST'] + groups['P'] + groups['Q'] + symbol_laws
                     + groups['bruhat'] + groups['extension'])
    families = []
    for selector in selectors:
        expanded = groups.get(selector)
        if expanded is None:
            if selector not in OWNERS and selector not in BRUHAT_FAMILIES:
                raise ConfigurationError(f"Unknown audit family or group '{selector}'")
            expanded = [selector]
        families.extend(f for f in expanded if f not in families)
    return families


def load_corpus(path, ring: DivisionRing, n: int) -> list[GroupWord]:
    """Read a corpus written by ``write_corpus``: one JSON string per line."""
    words = []
    with open(path, 'rb') as handle:
        for line in handle:
            if line.strip():
                words.append(parse_word(ring, orjson.loads(line), ELEMENTARY, n))
    logger.info(f"Replaying {len(words)} words from {path}")
    return words


def write_corpus(path, words: Sequence[GroupWord]) -> None:
    with open(path, 'wb') as handle:
        for word in words:
            handle.write(orjson.dumps(str(word)) + b'\n')
    logger.info(f"Wrote {len(words)} corpus words to {path}")


def run_audit(selectors: Sequence[str], config: RunConfig, corpus: Optional[Sequence[GroupWord]] = None,
              corpus_path=None) -> AuditReport:
    ring = config.build_ring()
    families = resolve_families(selectors, config.n, ring)
    report = AuditReport(seed=config.seed)
    if corpus_path is not None and corpus is None:
        corpus = corpus_words(ring, config.n, config.seed, config.samples, config.word_length,
                              config.degree_cap)
        write_corpus(corpus_path, corpus)
    for family in families:
        before = {key: row.failures for key, row in report.rows.items()}
        if family in BRUHAT_FAMILIES:
            report = audit_bruhat(family, ring, config.n, config.samples, config.seed, config.degree_cap,
                                  config.word_length, config.workers, corpus, report)
        else:
            report = OWNERS[family](family, ring, config, report)
        rows = [row for key, row in report.rows.items() if key[0] == family]
        failures = sum(row.failures - before.get((row.family, row.branch), 0)
                       for row in rows if not row.informational)
        events.info('family_audited', family=family, ring=ring.spec.label, n=config.n,
                    branches=len(rows), failures=failures)
        if failures:
            logger.error(f"{family}: {failures} failing instances")
    return report
