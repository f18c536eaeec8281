import os
import json
import tempfile
from io import StringIO
from unittest import mock

from django.test import SimpleTestCase, override_settings
from django.core.management import call_command
from django.core.management.base import CommandError

from racah.exceptions import DomainError
from racah.applications.regge import choices as regge_choices
from racah.applications.superalgebra import choices as super_choices
from racah.applications.symbol.values import Symbol3j
from partitions.applications.census import choices
from partitions.applications.census.backends.csvfile import CsvWriter
from partitions.applications.census.backends.jsonlines import JsonLinesWriter
from partitions.applications.census.services import CensusService, EnumerateService
from partitions.applications.census.values import CensusConfig
from partitions.applications.selector import choices as selector_choices


def S(text):
    return Symbol3j.parse(text.split())


class CensusConfigTest(SimpleTestCase):
    def test_defaults(self):
        config = CensusConfig('7/2')
        self.assertEqual(config.tjmax, 7)
        self.assertEqual(config.kind, regge_choices.KIND_CLASSICAL)
        self.assertEqual(config.format, choices.FORMAT_JSON_LINES)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            CensusConfig('-1')
        with self.assertRaises(DomainError):
            CensusConfig('1', kind='quantum')
        with self.assertRaises(DomainError):
            CensusConfig('1', format='xml')
        with self.assertRaises(DomainError):
            CensusConfig('1', workers=0)


class EnumerateTest(SimpleTestCase):
    def test_zero(self):
        self.assertEqual(EnumerateService.enumerate(CensusConfig(0)), [S('0 0 0 / 0 0 0')])

    def test_one(self):
        self.assertEqual(EnumerateService.enumerate(CensusConfig(1)), [
            S('0 0 0 / 0 0 0'),
            S('0 1/2 1/2 / 0 -1/2 1/2'),
            S('0 1 1 / 0 -1 1'),
            S('0 1 1 / 0 0 0'),
            S('1/2 1/2 1 / -1/2 -1/2 1'),
            S('1/2 1/2 1 / -1/2 1/2 0'),
            S('1 1 1 / -1 0 1'),
            S('1 1 1 / 0 0 0'),
        ])

    def test_super_half(self):
        symbols = EnumerateService.enumerate(CensusConfig('1/2', kind=regge_choices.KIND_SUPER))
        self.assertIn(S('1/2 1/2 1/2 / 0 0 0'), symbols)

    def test_once_per_class(self):
        symbols = EnumerateService.enumerate(CensusConfig(3))
        self.assertEqual(len({s.key for s in symbols}), len(symbols))

    def test_flat(self):
        symbols = EnumerateService.enumerate(CensusConfig('3/2', kind=regge_choices.KIND_FLAT))
        self.assertIn(S('1/2 1/2 1 / 0 0 0'), symbols)

    def test_shards(self):
        symbols = EnumerateService.enumerate(CensusConfig(2))
        shards = EnumerateService.shards(symbols, 3)
        self.assertEqual([s for shard in shards for s in shard], symbols)
        for shard in shards:
            self.assertLessEqual(len(shard), 3)
            self.assertEqual(len({s.tj[0] for s in shard}), 1)


@override_settings(SELECTOR_CALIBRATION_JMAX='1', SELECTOR_CONVENTION='unordered', CENSUS_WORKERS=0)
class RunCensusTest(SimpleTestCase):
    def test_classical(self):
        report = CensusService.run_census(CensusConfig(2))
        self.assertTrue(report.ok, report.violations)
        self.assertEqual(report.total, len(EnumerateService.enumerate(CensusConfig(2))))
        self.assertLessEqual(set(report.counts), set(selector_choices.LABELS))
        self.assertEqual(report.calibration.chosen, selector_choices.CONVENTION_UNORDERED)
        self.assertIsNone(report.phase_variant)

    @override_settings(SELECTOR_CALIBRATION_JMAX='4')
    def test_default_cutoff(self):
        report = CensusService.run_census(CensusConfig(4))
        self.assertTrue(report.ok, report.violations)
        self.assertLessEqual(set(report.counts), {0, 1, 2, 4, 5})
        self.assertEqual(str(report.calibration.jmax), '4')
        self.assertEqual(report.calibration.chosen, selector_choices.CONVENTION_UNORDERED)

    def test_super(self):
        report = CensusService.run_census(CensusConfig('3/2', kind=regge_choices.KIND_SUPER))
        self.assertTrue(report.ok, report.violations)
        self.assertEqual(report.phase_variant, super_choices.PHASE_PLUS_PLUS)
        self.assertNotIn(selector_choices.FORBIDDEN_LABEL, report.counts)

    def test_flat(self):
        report = CensusService.run_census(CensusConfig(2, kind=regge_choices.KIND_FLAT))
        self.assertTrue(report.ok, report.violations)
        self.assertLessEqual(set(report.counts), set(selector_choices.BETA_LABELS))

    @override_settings(CENSUS_CHUNK_SIZE=4)
    def test_parallel_is_deterministic(self):
        config = CensusConfig('5/2', workers=1)
        serial = [(o.record.key, o.record.partition) for o in CensusService.outcomes(config, 'unordered')]
        config = CensusConfig('5/2', workers=2)
        parallel = [(o.record.key, o.record.partition) for o in CensusService.outcomes(config, 'unordered')]
        self.assertEqual(serial, parallel)

    def test_writers(self):
        out = StringIO()
        CensusService.run_census(CensusConfig('1/2'), JsonLinesWriter(out))
        lines = out.getvalue().splitlines()
        self.assertEqual(len(lines), 2)
        record = json.loads(lines[0])
        self.assertEqual(record['j'], ['0', '0', '0'])
        self.assertEqual(record['value'], {'sign': 1, 'radicand': '1/1'})
        self.assertEqual(record['partition'], record['oracle'])

        out = StringIO()
        CensusService.run_census(CensusConfig('1/2'), CsvWriter(out))
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], ','.join(choices.CSV_HEADER))
        self.assertEqual(lines[1], '0,0,0,0,0,0,alpha,1,1/1,0')


@override_settings(SELECTOR_CALIBRATION_JMAX='1', SELECTOR_CONVENTION='unordered', CENSUS_WORKERS=0)
class CensusCommandTest(SimpleTestCase):
    def call(self, *args):
        out, err = StringIO(), StringIO()
        call_command('census', *args, stdout=out, stderr=err)
        return out.getvalue(), err.getvalue()

    def test_json_lines(self):
        out, err = self.call('--jmax', '1')
        self.assertEqual(len(out.splitlines()), 8)
        summary = json.loads(err)
        self.assertEqual(summary['total'], 8)
        self.assertEqual(summary['violations'], [])
        self.assertEqual(summary['calibration']['chosen'], 'unordered')

    def test_csv(self):
        out, err = self.call('--jmax', '1', '--format', 'csv')
        self.assertEqual(out.splitlines()[0], 'j1,j2,j3,m1,m2,m3,parity,sign,radicand,partition')

    def test_super_summary(self):
        out, err = self.call('--kind', 'super', '--jmax', '1')
        summary = json.loads(err)
        self.assertEqual(summary['kind'], 'super')
        self.assertEqual(summary['phase_variant'], 'plus-plus')
        self.assertEqual(summary['violations'], [])

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'census.jsonl')
            out, err = self.call('--jmax', '1/2', '--output', path)
            with open(path) as stream:
                self.assertEqual(len(stream.read().splitlines()), 2)
        self.assertEqual(json.loads(out)['total'], 2)

    def test_bad_jmax(self):
        with self.assertRaises(CommandError) as e:
            self.call('--jmax', 'one')
        self.assertEqual(e.exception.returncode, 1)

    def test_violation(self):
        target = 'partitions.applications.census.services.outcome.ClassifyService.classify'
        with mock.patch(target, return_value=4):
            with self.assertRaises(CommandError) as e:
                self.call('--jmax', '1')
        self.assertEqual(e.exception.returncode, 3)
