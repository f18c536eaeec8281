import json
from io import StringIO

from django.test import SimpleTestCase, override_settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.core.exceptions import ImproperlyConfigured
from hypothesis import given, settings, strategies as st

from racah.exceptions import InvariantViolation, ParityError
from racah.applications.regge.services import OrbitService, SymmetryService
from racah.applications.symbol.services import EnumerationService, ParityService
from racah.applications.symbol.values import Symbol3j
from partitions.applications.selector import choices
from partitions.applications.selector.serializers import CalibrationRecordSerializer
from partitions.applications.selector.services import CalibrationService, ClassifyService, ClauseService, ProfileService
from partitions.applications.selector.values import SelectorProfile


def S(text):
    return Symbol3j.parse(text.split())


def canonical_classical(tjmax):
    return [s for s in EnumerationService.classical(tjmax, ordered=True) if SymmetryService.is_canonical(s)]


GENERIC = '7/2 7 9/2 / 1/2 2 -5/2'


class SelectorProfileTest(SimpleTestCase):
    def test_zero(self):
        profile = ProfileService.selector_profile(S('0 0 0 / 0 0 0'))
        self.assertEqual(profile.as_tuple(), (6, 6, 3, 6))

    def test_all_ones(self):
        profile = ProfileService.selector_profile(S('1 1 1 / 0 0 0'))
        self.assertEqual(profile.n0_m, 3)
        self.assertEqual(profile.n0_d, 6)

    def test_ordered_doubles(self):
        symbol = S('1 1 0 / 1 -1 0')
        unordered = ProfileService.selector_profile(symbol, choices.CONVENTION_UNORDERED)
        ordered = ProfileService.selector_profile(symbol, choices.CONVENTION_ORDERED)
        self.assertEqual(unordered.n0_pm, 4)
        self.assertEqual(ordered.n0_pm, 8)
        self.assertEqual(ordered.n0_d, 2 * unordered.n0_d)
        self.assertEqual((ordered.n0_m, ordered.n0_R), (unordered.n0_m, unordered.n0_R))

    def test_generic(self):
        profile = ProfileService.selector_profile(S(GENERIC))
        self.assertEqual(profile.n0_pm, 0)
        self.assertEqual(profile.n0_m, 0)

    def test_equal_pairs(self):
        profile = ProfileService.selector_profile(S('1 1 0 / 0 0 0'))
        self.assertEqual(profile.equal_pairs, ((True, True), (False, False), (False, False)))

    def test_invariant_on_class(self):
        for symbol in EnumerationService.classical(4):
            canonical = SymmetryService.classical_set(symbol).canonical
            self.assertEqual(
                ProfileService.selector_profile(symbol).as_tuple(),
                ProfileService.selector_profile(canonical).as_tuple(),
            )


class ClauseTest(SimpleTestCase):
    def test_generic_is_five(self):
        self.assertEqual(ClauseService.labels(SelectorProfile(0, 0, 0, 0, ((False, False),) * 3)), (5,))

    def test_plus_pair_with_one_triangle_match(self):
        pairs = ((True, False), (False, False), (False, True))
        self.assertEqual(ClauseService.labels(SelectorProfile(2, 0, 0, 1, pairs)), (5,))
        self.assertEqual(ClauseService.labels(SelectorProfile(2, 0, 0, 2, pairs)), ())

    def test_unmatched(self):
        self.assertEqual(ClauseService.labels(SelectorProfile(5, 0, 2, 0, ((False, False),) * 3)), ())

    def test_three_never_matches(self):
        for n0_pm in range(7):
            for n0_m in range(4):
                profile = SelectorProfile(0, n0_pm, n0_m, 0, ((False, False),) * 3)
                self.assertNotIn(choices.FORBIDDEN_LABEL, ClauseService.labels(profile))


class ClassifyTest(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(ClassifyService.classify(S('1 1 0 / 1 -1 0')), 0)
        self.assertEqual(ClassifyService.classify(S('1 1 0 / 0 0 0')), 1)
        self.assertEqual(ClassifyService.classify(S('1 1 1 / 0 0 0')), 0)
        self.assertEqual(ClassifyService.classify(S(GENERIC)), 5)

    def test_plus_pair_beside_minus_pair(self):
        for text in ('3/2 2 7/2 / -1/2 -1 3/2', '3/2 3 7/2 / -3/2 1 1/2'):
            symbol = S(text)
            profile = ProfileService.selector_profile(symbol)
            self.assertEqual(profile.as_tuple(), (2, 0, 0, 1))
            self.assertEqual(ClassifyService.classify(symbol), 5)
            self.assertEqual(OrbitService.orbit(symbol).n_empty, 5)

    def test_unclassifiable(self):
        with self.assertRaises(InvariantViolation):
            ClassifyService.classify(S('1 1 0 / 1 -1 0'), choices.CONVENTION_ORDERED)

    def test_matches_orbit(self):
        for symbol in canonical_classical(8):
            with self.subTest(symbol=str(symbol)):
                self.assertEqual(ClassifyService.classify(symbol), OrbitService.orbit(symbol).n_empty)

    def test_constant_on_orbit(self):
        for symbol in canonical_classical(4):
            label = ClassifyService.classify(symbol)
            for member in OrbitService.orbit(symbol).classes:
                self.assertEqual(ClassifyService.classify(member.canonical), label)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(canonical_classical(8)))
    def test_checked(self, symbol):
        self.assertIn(ClassifyService.checked(symbol), choices.LABELS)


class ClassifySuperTest(SimpleTestCase):
    def test_beta_example(self):
        self.assertEqual(ClassifyService.classify_super_beta(S('1 3/2 1/2 / 0 0 0')), 1)

    def test_beta_needs_beta(self):
        with self.assertRaises(ParityError):
            ClassifyService.classify_super_beta(S('1 1 0 / 0 0 0'))

    def test_beta_matches_restricted_orbit(self):
        for symbol in EnumerationService.super(5, ordered=True):
            if not ParityService.classify_parity(symbol).is_beta():
                continue
            with self.subTest(symbol=str(symbol)):
                self.assertEqual(
                    ClassifyService.classify_super_beta(symbol),
                    OrbitService.beta_orbit(symbol).n_empty,
                )

    def test_dispatch(self):
        self.assertEqual(ClassifyService.classify_super_partition(S('1 1 0 / 0 0 0')), 1)
        self.assertIn(ClassifyService.classify_super_partition(S('1 3/2 1/2 / 0 0 0')), choices.BETA_LABELS)


class CalibrationTest(SimpleTestCase):
    def test_unordered_wins(self):
        record = CalibrationService.calibrate(4)
        self.assertEqual(record.chosen, choices.CONVENTION_UNORDERED)
        self.assertEqual(record.agreements[choices.CONVENTION_UNORDERED], record.total)
        self.assertLess(record.agreements[choices.CONVENTION_ORDERED], record.total)
        data = CalibrationRecordSerializer(record).data
        self.assertEqual(data['jmax'], '2')
        self.assertEqual(data['chosen'], choices.CONVENTION_UNORDERED)

    def test_default_cutoff(self):
        record = CalibrationService.calibrate(CalibrationService.calibration_jmax())
        self.assertEqual(str(record.jmax), '4')
        self.assertEqual(record.chosen, choices.CONVENTION_UNORDERED)
        self.assertEqual(record.agreements[choices.CONVENTION_UNORDERED], record.total)

    @override_settings(SELECTOR_CONVENTION='auto', SELECTOR_CALIBRATION_JMAX='2')
    def test_auto(self):
        self.assertEqual(CalibrationService.configured_convention(), choices.CONVENTION_UNORDERED)

    @override_settings(SELECTOR_CONVENTION='diagonal')
    def test_unknown(self):
        with self.assertRaises(ImproperlyConfigured):
            CalibrationService.configured_convention()


class ClassifyCommandTest(SimpleTestCase):
    def call(self, *args):
        out = StringIO()
        call_command('classify', *args, stdout=out)
        return json.loads(out.getvalue())

    def test_classical(self):
        data = self.call('1', '1', '0', '/', '0', '0', '0')
        self.assertEqual(data['partition'], 1)
        self.assertEqual(data['parity'], 'alpha')
        self.assertEqual(data['selectors']['n0_pm'], 2)

    def test_super_beta(self):
        data = self.call('--kind', 'super', '1', '3/2', '1/2', '/', '0', '0', '0')
        self.assertEqual(data['parity'], 'beta1')
        self.assertEqual(data['partition'], 1)

    def test_flat(self):
        data = self.call('--kind', 'flat', '1', '3', '2', '/', '-1/2', '1', '-1/2')
        self.assertEqual(data['parity'], 'beta2')
        self.assertEqual(data['partition'], 0)
        self.assertEqual((data['selectors']['n0_d'], data['selectors']['n0_pm']), (1, 2))

    def test_flat_needs_flat_symbol(self):
        with self.assertRaises(CommandError) as e:
            self.call('--kind', 'flat', '1', '1', '1', '/', '0', '0', '0')
        self.assertEqual(e.exception.returncode, 2)
