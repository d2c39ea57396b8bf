"""
Factor the product of an elementary word as u w v.
"""

from audits.parsing import ELEMENTARY, parse_word
from audits.reports import CommandReport
from bruhat.factorization import LEFT, RIGHT, factorize

from ._base import TwlCommand


class Command(TwlCommand):
    help = 'Compute the u w v factorization of an elementary word'
    command_name = 'factor'

    def add_command_arguments(self, parser):
        parser.add_argument('word', help='Elementary word, e.g. "x[2,1](1)"')
        parser.add_argument('--order', choices=(LEFT, RIGHT), default=RIGHT,
                            help='Absorb letters from the right end (default) or the left end')

    def execute_run(self, config, options):
        ring = config.build_ring()
        word = parse_word(ring, options['word'], ELEMENTARY, config.n)
        fac = factorize(word, options['order'])
        results = {
            'word': str(word),
            'factorization': fac.to_dict(),
            'u': str(fac.u),
            'w': str(fac.w.to_matrix()),
            'v': str(fac.v),
        }
        return CommandReport(self.command_name, config.echo(), results)
