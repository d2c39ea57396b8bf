"""
Compute rho(e), the monomial part of the double coset U e U.
"""

from audits.parsing import ELEMENTARY, parse_word
from audits.reports import CommandReport
from bruhat.factorization import LEFT, RIGHT, factorize

from ._base import TwlCommand


class Command(TwlCommand):
    help = 'Compute rho of an elementary word and check that both absorption orders agree'
    command_name = 'rho'

    def add_command_arguments(self, parser):
        parser.add_argument('word', help='Elementary word')

    def execute_run(self, config, options):
        ring = config.build_ring()
        word = parse_word(ring, options['word'], ELEMENTARY, config.n)
        right, left = factorize(word, RIGHT).w, factorize(word, LEFT).w
        results = {
            'word': str(word),
            'sigma': list(right.sigma),
            'units': [str(u) for u in right.units],
            'orders_agree': right == left,
        }
        return CommandReport(self.command_name, config.echo(), results, verdict=right == left)
