"""
Test suite for word parsing, run configuration, reports and the twl commands.
"""

import random
import tempfile
from io import StringIO
from pathlib import Path

import hypothesis
import hypothesis.strategies as strat
import orjson
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from linear.generators import gen_w, gen_x, random_word
from ring.auditing import AuditReport, Outcome
from ring.exceptions import ConfigurationError, DomainError, ParseError
from ring.literals import parse_poly
from ring.scalars import build_ring
from ring.specs import load_ring_spec
from steinberg.words import hat_c, st_phi
from symbols.words import GENERAL, SYMPLECTIC

from twl import main as twl_main

from .config import RunConfig
from .monitoring import ResourceMonitor
from .parsing import ELEMENTARY, STEINBERG, SYMBOL, parse_word
from .reports import CommandReport, render_json, render_text, write_report
from .runner import load_corpus, resolve_families, run_audit, write_corpus

F4 = build_ring(load_ring_spec('F4'))
F5 = build_ring(load_ring_spec('F5'))
F9 = build_ring(load_ring_spec('F9'))
QUAT = build_ring(load_ring_spec('H'))


def poly(text, ring=F4):
    return parse_poly(ring, text)


def config(**overrides):
    options = {'ring': 'F5', 'n': 2, 'seed': 0, 'samples': 2, 'degree_cap': 1, 'word_length': 4, 'workers': 1}
    options.update(overrides)
    return RunConfig.from_options(options)


def run(name, *args):
    stdout = StringIO()
    call_command(name, *args, stdout=stdout)
    return stdout.getvalue()


class ParseWordTestCase(SimpleTestCase):
    """Test cases for parse_word over the three alphabets."""

    def test_single_elementary_letter(self):
        word = parse_word(F4, 'x[1,2](g*t^1)', ELEMENTARY)
        self.assertEqual(len(word), 1)
        letter = word.letters[0]
        self.assertEqual((letter.i, letter.j), (1, 2))
        self.assertEqual(letter.payload, poly('g*t'))

    def test_inverse_negates_x_payload(self):
        word = parse_word(F5, 'x[1,2](1)^-1', ELEMENTARY)
        self.assertEqual(word.letters[0].payload, poly('4', F5))

    def test_inverse_keeps_h_power(self):
        word = parse_word(F5, 'h[1,2](t)^-1', ELEMENTARY)
        self.assertEqual(word.letters[0].power, -1)
        self.assertEqual(str(word), 'h[1,2](t^1)^-1')

    def test_elementary_matrix(self):
        word = parse_word(F4, 'x[1,2](g) * w[2,1](t^-1)', ELEMENTARY)
        self.assertEqual(word.matrix(), gen_x(2, 1, 2, poly('g')) * gen_w(2, 2, 1, poly('t^-1')))

    def test_affine_letter(self):
        word = parse_word(F4, 'xa[2,1,1](g)', ELEMENTARY)
        self.assertEqual(word.matrix(), gen_x(2, 2, 1, poly('t*g')))

    def test_printed_word_parses_back(self):
        rng = random.Random(5)
        word = random_word(F9, 3, rng, 6)
        again = parse_word(F9, str(word), ELEMENTARY, 3)
        self.assertEqual(str(again), str(word))
        self.assertEqual(again.matrix(), word.matrix())

    def test_symbol_word(self):
        word = parse_word(F5, 'c(t,2)*c(2,t)', SYMBOL)
        self.assertEqual(len(word), 2)
        self.assertEqual(word.presentation, SYMPLECTIC)
        self.assertEqual(parse_word(F5, 'c(t,2)^-1', SYMBOL, 3).presentation, GENERAL)
        self.assertEqual(parse_word(F5, 'c(t,2)^-1', SYMBOL).symbols[0].power, -1)

    def test_steinberg_macros(self):
        word = parse_word(QUAT, 'hc(i*t^1, j)', STEINBERG)
        self.assertEqual(st_phi(word), st_phi(hat_c(2, poly('i*t', QUAT), poly('j', QUAT))))
        self.assertEqual(len(parse_word(QUAT, 'X[1,2](i)*hh[2,1](t)^-1', STEINBERG)), 7)

    def test_empty_word(self):
        self.assertEqual(len(parse_word(F4, '1', ELEMENTARY)), 0)
        self.assertEqual(len(parse_word(F4, '  ', SYMBOL)), 0)

    def test_errors_carry_positions(self):
        with self.assertRaises(ParseError) as raised:
            parse_word(F4, 'x[1,2](g)*y[1,2](1)', ELEMENTARY)
        self.assertEqual(raised.exception.position, 10)
        with self.assertRaises(ParseError) as raised:
            parse_word(F5, 'x[1,2](g)', ELEMENTARY)
        self.assertEqual(raised.exception.position, 7)
        with self.assertRaises(ParseError):
            parse_word(F4, 'x[1,2](g', ELEMENTARY)
        with self.assertRaises(ParseError):
            parse_word(F4, 'x[1,3](g)', ELEMENTARY)
        with self.assertRaises(ParseError):
            parse_word(F4, 'w[1,2](1+t)', ELEMENTARY)
        with self.assertRaises(ParseError):
            parse_word(F4, 'x[1,2](g) x[2,1](g)', ELEMENTARY)

    def test_rank_must_be_at_least_two(self):
        with self.assertRaises(DomainError):
            parse_word(F4, 'c(t,g)', SYMBOL, 1)


class RunConfigTestCase(SimpleTestCase):
    """Test cases for RunConfig."""

    @override_settings(TWL_DEFAULT_SAMPLES=17, TWL_DEFAULT_N=3)
    def test_defaults_come_from_settings(self):
        run_config = RunConfig.from_options({'ring': 'F9'})
        self.assertEqual(run_config.samples, 17)
        self.assertEqual(run_config.n, 3)
        self.assertEqual(run_config.ring.label, 'F9:1')

    def test_invalid_values_rejected(self):
        with self.assertRaises(ConfigurationError):
            config(n=1)
        with self.assertRaises(ConfigurationError):
            config(samples=0)
        with self.assertRaises(ConfigurationError):
            config(degree_cap=-1)
        with self.assertRaises(ConfigurationError):
            RunConfig.from_options({})
        with self.assertRaises(ConfigurationError):
            config(ring='F6')

    def test_echo_leaves_out_execution_details(self):
        echo = config(workers=4, output='report.json').echo()
        self.assertNotIn('workers', echo)
        self.assertNotIn('output', echo)
        self.assertEqual(echo['ring'], 'F5:0')


class ReportTestCase(SimpleTestCase):
    """Test cases for report rendering."""

    def setUp(self):
        self.audit = AuditReport(seed=3)
        self.audit.record('R1', Outcome('i<j', True))
        self.audit.record('R1', Outcome('i>j', False, {'f': 't^1'}))
        self.audit.record('R4', Outcome('printed', False, informational=True))
        self.audit.note('R4 printed sign is informational')

    def test_text_report(self):
        report = CommandReport('audit', {'ring': 'F5:0', 'seed': 3}, audit=self.audit)
        text = render_text(report)
        self.assertTrue(text.startswith('twl audit\nring=F5:0  seed=3\n'))
        self.assertIn('R4      printed (informational)', text)
        self.assertIn('first failure R1/i>j: {"f":"t^1"}', text)
        self.assertTrue(text.endswith('seed=3  verdict=FAIL\n'))

    def test_informational_rows_do_not_fail(self):
        audit = AuditReport(seed=0)
        audit.record('R4', Outcome('printed', False, informational=True))
        self.assertTrue(CommandReport('audit', {'seed': 0}, audit=audit).passed)

    def test_json_report_is_sorted(self):
        report = CommandReport('k2-witness', {'seed': 0, 'ring': 'F5:0'}, {'witness': True, 'tame': '3'})
        data = orjson.loads(render_json(report))
        self.assertEqual(data['results'], {'tame': '3', 'witness': True})
        self.assertEqual(list(data), sorted(data))

    def test_verdict_overrides(self):
        self.assertFalse(CommandReport('symbol witness', {}, {'witness': False}, verdict=False).passed)

    def test_write_report_picks_rendering(self):
        report = CommandReport('eval', {'seed': 0}, {'matrix': '[1]'})
        with tempfile.TemporaryDirectory() as directory:
            write_report(report, Path(directory) / 'out' / 'report.json')
            write_report(report, Path(directory) / 'report.txt')
            self.assertEqual((Path(directory) / 'out' / 'report.json').read_bytes(), render_json(report))
            self.assertEqual((Path(directory) / 'report.txt').read_text(), render_text(report))


class RunnerTestCase(SimpleTestCase):
    """Test cases for family resolution and audit runs."""

    def test_groups_expand(self):
        self.assertEqual(resolve_families(['R'], 2, F4), ['R1', 'R2', 'R3', 'R4', 'R5', 'R6'])
        self.assertNotIn('TT0', resolve_families(['ST'], 2, F4))
        self.assertIn('TT0', resolve_families(['ST'], 3, F4))
        self.assertIn('steinberg', resolve_families(['all'], 2, F5))
        self.assertNotIn('steinberg', resolve_families(['all'], 2, F4))
        self.assertEqual(resolve_families(['R1', 'R', 'commute'], 2, F4)[-1], 'commute')

    def test_unknown_family(self):
        with self.assertRaises(ConfigurationError):
            resolve_families(['R7'], 2, F4)

    def test_families_from_several_apps(self):
        report = run_audit(['R1', 'T1', 'P1', 'rho_step', 'central'], config(ring='F9', samples=2))
        self.assertTrue(report.passed, msg=str(report.to_dict()))
        families = {row.family for row in report.sorted_rows()}
        self.assertEqual(families, {'R1', 'T1', 'P1', 'rho_step', 'central'})

    def test_corpus_round_trip(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'corpus.jsonl'
            run_config = config(ring='F4', samples=3, word_length=5)
            first = run_audit(['factorization'], run_config, corpus_path=path)
            words = load_corpus(path, F4, 2)
            self.assertEqual(len(words), 3)
            replayed = run_audit(['factorization'], run_config, corpus=words)
            self.assertEqual(first.to_dict(), replayed.to_dict())

    def test_write_corpus_lines(self):
        word = parse_word(F5, 'x[2,1](1)*w[1,2](t)', ELEMENTARY)
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'corpus.jsonl'
            write_corpus(path, [word])
            self.assertEqual(path.read_bytes(), b'"x[2,1](1)*w[1,2](t^1)"\n')


class MonitoringTestCase(SimpleTestCase):
    """Test cases for ResourceMonitor."""

    def test_usage_is_recorded(self):
        with ResourceMonitor('test') as monitor:
            monitor.sample()
        self.assertGreaterEqual(monitor.usage.elapsed_seconds, 0.0)
        self.assertGreater(monitor.usage.peak_rss_mb, 0.0)
        self.assertIn('elapsed', monitor.usage.summary())


class CommandTestCase(SimpleTestCase):
    """Test cases for the management commands and their exit codes."""

    def test_k2_witness(self):
        output = run('k2_witness', 'c(t,2)', '--ring', 'F5')
        self.assertIn('witness: True', output)
        self.assertIn('tame: 3', output)
        self.assertIn('separated_by: tame', output)
        self.assertIn('verdict=PASS', output)

    def test_k2_witness_fails_off_kernel(self):
        with self.assertRaises(CommandError) as raised:
            run('k2_witness', 'c(g*t^1,g)', '--ring', 'F4')
        self.assertEqual(raised.exception.returncode, 2)

    def test_factor(self):
        output = run('factor', 'x[2,1](1)', '--ring', 'F5', '--n', '2')
        self.assertIn('"sigma":[2,1]', output)
        self.assertIn('"units":["1","4"]', output)

    def test_rho_orders_agree(self):
        output = run('rho', 'x[2,1](2)*w[1,2](t)*x[1,2](t^-1)', '--ring', 'F5')
        self.assertIn('orders_agree: True', output)

    def test_eval_alphabets(self):
        self.assertIn('matrix: [1, 0; 1, 1]', run('eval', 'x[2,1](1)', '--ring', 'F5'))
        output = run('eval', 'c(t,2)*c(2,t)', '--alphabet', 'symbol', '--ring', 'F5')
        self.assertIn('kernel_witness: True', output)
        self.assertIn('tame: 1', output)

    def test_symbol_actions(self):
        self.assertIn('witness: True', run('symbol', 'witness', 'c(t,2)', '--ring', 'F5'))
        self.assertIn('image: g', run('symbol', 'eval', 'c(g*t^1,g)', '--ring', 'F4'))

    def test_audit_passes(self):
        output = run('audit', 'R', '--ring', 'F4', '--n', '3', '--samples', '3', '--seed', '7')
        self.assertIn('verdict=PASS', output)

    def test_usage_errors_exit_one(self):
        for args in (('audit', 'R9', '--ring', 'F4'), ('eval', 'x[1,2](', '--ring', 'F4'),
                     ('eval', 'x[1,2](1)', '--ring', 'F6'), ('eval', 'x[1,2](1)')):
            with self.assertRaises(CommandError, msg=str(args)) as raised:
                run(*args)
            self.assertEqual(raised.exception.returncode, 1)

    def test_reports_are_byte_identical(self):
        with tempfile.TemporaryDirectory() as directory:
            paths = [Path(directory) / f'run{k}.json' for k in range(2)]
            for k, path in enumerate(paths):
                run('extension_check', '--family', 'central', '--ring', 'F9', '--samples', '2',
                    '--workers', str(k + 1), '--output', str(path))
            self.assertEqual(paths[0].read_bytes(), paths[1].read_bytes())

    def test_twl_entry_point(self):
        self.assertEqual(twl_main(['k2-witness', 'c(t,2)', '--ring', 'F5']), 0)
        self.assertEqual(twl_main(['audit', 'nonsense', '--ring', 'F5']), 1)
        self.assertEqual(twl_main(['k2-witness', 'c(g*t^1,g)', '--ring', 'F4']), 2)
        self.assertEqual(twl_main(['unknown']), 1)


@hypothesis.settings(max_examples=25, deadline=None)
@hypothesis.given(strat.integers(0, 2 ** 32), strat.sampled_from([F4, F9, QUAT]), strat.integers(2, 3))
def test_printed_words_parse_back(seed, ring, n):
    word = random_word(ring, n, random.Random(seed), 5)
    again = parse_word(ring, str(word), ELEMENTARY, n)
    assert str(again) == str(word)
    assert again.matrix() == word.matrix()
