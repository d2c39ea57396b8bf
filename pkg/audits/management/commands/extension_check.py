"""
Run the extension audits: commutation, transitivity and centrality of the
actions on compatible pairs, and the relations of H~ and N~.
"""

from audits.reports import CommandReport
from audits.runner import run_audit
from extension.audits import EXTENSION_FAMILIES

from ._base import TwlCommand


class Command(TwlCommand):
    help = 'Audit the central extension construction'
    command_name = 'extension-check'

    def add_command_arguments(self, parser):
        parser.add_argument('--family', action='append', choices=EXTENSION_FAMILIES, dest='families',
                            help='Restrict to one family (repeatable); all families by default')

    def execute_run(self, config, options):
        families = options.get('families') or list(EXTENSION_FAMILIES)
        report = run_audit(families, config)
        return CommandReport(self.command_name, config.echo(), {'families': families}, report)
