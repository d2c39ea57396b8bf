"""
Run audit families and report per-branch tallies.
"""

from pathlib import Path

from audits.reports import CommandReport
from audits.runner import load_corpus, run_audit

from ._base import TwlCommand


class Command(TwlCommand):
    help = 'Audit relation families: R, ST, P, Q, bruhat, extension, all, or single family names'
    command_name = 'audit'

    def add_command_arguments(self, parser):
        parser.add_argument('families', nargs='+', help='Families or groups, e.g. R ST2 "P5\'" bruhat')
        parser.add_argument('--corpus', help='Write the factorization word corpus to this JSON lines file')
        parser.add_argument('--replay', help='Replay a corpus written by --corpus')

    def execute_run(self, config, options):
        corpus = None
        if options.get('replay'):
            corpus = load_corpus(Path(options['replay']), config.build_ring(), config.n)
        corpus_path = Path(options['corpus']) if options.get('corpus') else None
        report = run_audit(options['families'], config, corpus, corpus_path)
        return CommandReport(self.command_name, config.echo(), {'families': options['families']}, report)
