"""
Shared plumbing for the twl management commands.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from audits.config import RunConfig
from audits.monitoring import ResourceMonitor
from audits.reports import CommandReport, render_text, write_report
from ring.exceptions import TwlError

logger = logging.getLogger(__name__)

USAGE_ERROR = 1
AUDIT_FAILURE = 2


class TwlCommand(BaseCommand):
    """Parses the run flags, runs ``execute_run`` and turns its report into an exit code."""

    command_name = ''
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--ring', help='Ring spec file or shorthand (F4, F9:0, H, H(-1,-3):1+j)')
        parser.add_argument('--n', type=int, help='Matrix size')
        parser.add_argument('--seed', type=int, help='Random seed')
        parser.add_argument('--samples', type=int, help='Instances per family')
        parser.add_argument('--degree-cap', type=int, dest='degree_cap',
                            help='Largest |t-exponent| in sampled payloads')
        parser.add_argument('--word-length', type=int, dest='word_length', help='Length of sampled words')
        parser.add_argument('--workers', type=int, help='Threads used for sampling')
        parser.add_argument('--output', help='Report path; *.json selects the JSON rendering')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def execute_run(self, config: RunConfig, options: dict) -> CommandReport:
        raise NotImplementedError

    def handle(self, *args, **options):
        with ResourceMonitor(self.command_name) as monitor:
            try:
                config = RunConfig.from_options(options)
                report = self.execute_run(config, options)
            except TwlError as e:
                logger.error(f"{self.command_name}: {type(e).__name__}: {e}")
                raise CommandError(f"{type(e).__name__}: {e}", returncode=USAGE_ERROR) from e

        self.stdout.write(render_text(report), ending='')
        if config.output is not None:
            write_report(report, config.output)
        self.stdout.write(self.style.NOTICE(f"{self.command_name}: {monitor.usage.summary()}"))

        if not report.passed:
            raise CommandError(f"{self.command_name} failed", returncode=AUDIT_FAILURE)
