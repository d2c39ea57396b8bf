"""
Certify a kernel element of K2 given by a symbol word.
"""

from audits.parsing import SYMBOL, parse_word
from audits.reports import CommandReport
from symbols.certificates import certificates_of, distinguishing
from symbols.words import SymbolWord, is_kernel_witness, symbol_image, tame_supported, tame_value

from ._base import TwlCommand


class Command(TwlCommand):
    help = 'Check that a symbol word lies in the kernel and whether a certificate separates it from 1'
    command_name = 'k2-witness'

    def add_command_arguments(self, parser):
        parser.add_argument('word', help='Symbol word, e.g. "c(t,2)"')

    def execute_run(self, config, options):
        ring = config.build_ring()
        word = parse_word(ring, options['word'], SYMBOL, config.n)
        witness = is_kernel_witness(word)
        identity = SymbolWord(ring, word.presentation)
        separating = distinguishing(certificates_of(word), certificates_of(identity))
        results = {
            'word': str(word),
            'image': str(symbol_image(word)),
            'witness': witness,
            'nontrivial': separating is not None,
            'separated_by': separating or '-',
        }
        if tame_supported(ring):
            results['tame'] = str(tame_value(word))
        return CommandReport(self.command_name, config.echo(), results, verdict=witness)
