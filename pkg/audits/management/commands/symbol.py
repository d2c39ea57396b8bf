"""
Evaluate a symbol word, or decide whether it witnesses a kernel element.
"""

from audits.parsing import SYMBOL, parse_word
from audits.reports import CommandReport
from symbols.certificates import certificates_of
from symbols.words import is_kernel_witness, symbol_image, tame_supported, tame_value

from ._base import TwlCommand

EVAL = 'eval'
WITNESS = 'witness'


class Command(TwlCommand):
    help = 'Evaluate a symbol word (eval) or test it as a kernel witness (witness)'
    command_name = 'symbol'

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=(EVAL, WITNESS))
        parser.add_argument('word', help='Symbol word, e.g. "c(t,2)*c(2,t)"')

    def execute_run(self, config, options):
        ring = config.build_ring()
        word = parse_word(ring, options['word'], SYMBOL, config.n)
        witness = is_kernel_witness(word)
        results = {
            'word': str(word),
            'presentation': word.presentation,
            'image': str(symbol_image(word)),
            'witness': witness,
        }
        if tame_supported(ring):
            results['tame'] = str(tame_value(word))
        results['certificates'] = {c.name: c.value for c in certificates_of(word)}
        verdict = witness if options['action'] == WITNESS else None
        return CommandReport(f"{self.command_name} {options['action']}", config.echo(), results,
                             verdict=verdict)
