"""
Evaluate a word of any alphabet to its matrix.
"""

from audits.parsing import ALPHABETS, ELEMENTARY, STEINBERG, SYMBOL, parse_word
from audits.reports import CommandReport
from steinberg.words import st_phi
from symbols.words import is_kernel_witness, symbol_image, tame_supported, tame_value

from ._base import TwlCommand


class Command(TwlCommand):
    help = 'Evaluate a word to its matrix (symbol words: commutator image and tame value)'
    command_name = 'eval'

    def add_command_arguments(self, parser):
        parser.add_argument('word', help='Word, e.g. "x[1,2](g*t^1)*w[2,1](1)"')
        parser.add_argument('--alphabet', choices=ALPHABETS, default=ELEMENTARY)

    def execute_run(self, config, options):
        ring = config.build_ring()
        alphabet = options['alphabet']
        word = parse_word(ring, options['word'], alphabet, config.n)
        results = {'word': str(word), 'alphabet': alphabet}
        if alphabet == ELEMENTARY:
            results['matrix'] = str(word.matrix())
        elif alphabet == STEINBERG:
            results['matrix'] = str(st_phi(word))
        elif alphabet == SYMBOL:
            results['image'] = str(symbol_image(word))
            results['kernel_witness'] = is_kernel_witness(word)
            if tame_supported(ring):
                results['tame'] = str(tame_value(word))
        return CommandReport(self.command_name, config.echo(), results)
