import json
from io import StringIO
from fractions import Fraction
from functools import lru_cache

from django.test import SimpleTestCase
from django.core.management import call_command
from django.core.management.base import CommandError

from racah.exceptions import DomainError, ParityError
from racah.applications.arithmetic.sqrt_rational import SqrtRational
from racah.applications.classical.services import WignerService
from racah.applications.regge import choices as regge_choices
from racah.applications.regge.services import TransformService
from racah.applications.superalgebra.services import SuperValueService
from racah.applications.symbol.services import EnumerationService, ParityService
from racah.applications.symbol.values import Symbol3j
from partitions.applications.prolongation.services import FlatService
from partitions.applications.prolongation.values import FlatBetaSymbol, UnderlinedSpins


def S(text):
    return Symbol3j.parse(text.split())


@lru_cache(maxsize=None)
def flat_symbols(tjmax):
    found = (FlatService.detect_flat_forbidden(s) for s in EnumerationService.symbols(tjmax))
    return [f for f in found if f is not None]


class FlatBetaSymbolTest(SimpleTestCase):
    def test_slots(self):
        self.assertEqual(FlatBetaSymbol(S('1/2 1/2 1 / 0 0 0'), 3).slots, (2, 0, 1))
        self.assertEqual(FlatBetaSymbol(S('7/2 2 3/2 / -1/2 1/2 0'), 1).slots, (0, 1, 2))

    def test_wrong_parity(self):
        with self.assertRaises(ParityError):
            FlatBetaSymbol(S('1/2 1/2 1 / 0 0 0'), 1)

    def test_not_flat(self):
        with self.assertRaises(DomainError):
            FlatBetaSymbol(S('1 3/2 1/2 / 0 0 0'), 1)

    def test_underlined_spins(self):
        spins = UnderlinedSpins.of(FlatBetaSymbol(S('7/2 2 3/2 / -1/2 1/2 0'), 1))
        self.assertEqual((spins.tj_lambda, spins.tj_mu, spins.tj_kappa), (3, 2, 5))


class DetectTest(SimpleTestCase):
    def test_smallest(self):
        flat = FlatService.detect_flat_forbidden(S('1/2 1/2 1 / 0 0 0'))
        self.assertEqual(flat.kappa, 3)

    def test_valid(self):
        self.assertIsNone(FlatService.detect_flat_forbidden(S('1 1 1 / 0 0 0')))

    def test_parentless_example_is_flat(self):
        flat = FlatService.detect_flat_forbidden(S('7/2 2 3/2 / -1/2 1/2 0'))
        self.assertEqual(flat.kappa, 1)

    def test_only_unprimed_beta(self):
        for flat in flat_symbols(6):
            parity = ParityService.classify_parity(flat.base)
            self.assertTrue(parity.is_beta())
            self.assertFalse(parity.primed)


class ProlongValueTest(SimpleTestCase):
    def test_smallest(self):
        flat = FlatService.detect_flat_forbidden(S('1/2 1/2 1 / 0 0 0'))
        self.assertEqual(FlatService.prolong_value(flat), SqrtRational.one())
        self.assertEqual(FlatService.identify_alpha(flat), S('0 0 0 / 0 0 0'))

    def test_examples(self):
        flat = FlatService.detect_flat_forbidden(S('1 1 2 / 1/2 -1/2 0'))
        self.assertEqual(FlatService.prolong_value(flat), SqrtRational(1, Fraction(1, 2)))
        self.assertEqual(FlatService.identify_alpha(flat), S('1/2 1/2 1 / 1/2 -1/2 0'))

        flat = FlatService.detect_flat_forbidden(S('7/2 2 3/2 / -1/2 1/2 0'))
        self.assertEqual(FlatService.prolong_value(flat), SqrtRational(-1, Fraction(3, 5)))
        self.assertEqual(FlatService.identify_alpha(flat), S('5/2 3/2 1 / -1/2 1/2 0'))

    def test_identified_is_flat_alpha(self):
        for flat in flat_symbols(7):
            alpha = FlatService.identify_alpha(flat)
            k, l, m = flat.slots
            self.assertEqual(ParityService.classify_parity(alpha).code, 'alpha')
            self.assertEqual(alpha.tj[k], alpha.tj[l] + alpha.tj[m])

    def test_matches_super_value(self):
        for flat in flat_symbols(12):
            with self.subTest(flat=repr(flat)):
                self.assertEqual(
                    FlatService.prolong_value(flat),
                    SuperValueService.compute_super_3j(FlatService.identify_alpha(flat)),
                )

    def test_matches_closed_form(self):
        for flat in flat_symbols(12):
            self.assertEqual(FlatService.prolong_value(flat), FlatService.edmonds_flat_value(flat))

    def test_closed_form_is_classical(self):
        for flat in flat_symbols(6):
            alpha = FlatService.identify_alpha(flat)
            scale = SqrtRational(1, flat.base.tj[flat.kappa - 1] - 1)
            self.assertEqual(FlatService.edmonds_flat_value(flat), scale * WignerService.compute_3j(alpha))

    def test_regge_images_agree(self):
        for flat in flat_symbols(6):
            alpha = FlatService.identify_alpha(flat)
            value = SuperValueService.compute_super_3j(alpha)
            for kappa in regge_choices.REGGE_TRANSFORMS:
                image = TransformService.apply_regge(alpha, kappa)
                self.assertEqual(SuperValueService.compute_super_3j(image), value, (flat, kappa))


class ClassifyFlatTest(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(FlatService.classify_flat(FlatService.detect_flat_forbidden(S('1/2 1/2 1 / 0 0 0'))), 0)
        self.assertEqual(FlatService.classify_flat(FlatService.detect_flat_forbidden(S('7/2 2 3/2 / -1/2 1/2 0'))), 0)

    def test_underlined_profile(self):
        profile = FlatService.underlined_profile(FlatService.detect_flat_forbidden(S('7/2 2 3/2 / -1/2 1/2 0')))
        self.assertEqual((profile.n0_d, profile.n0_pm), (2, 1))

    def test_chain_through_mu(self):
        flat = FlatService.detect_flat_forbidden(S('1 3 2 / -1/2 1 -1/2'))
        self.assertEqual(flat.kappa, 2)
        profile = FlatService.underlined_profile(flat)
        self.assertEqual((profile.n0_d, profile.n0_pm), (1, 2))
        self.assertEqual(FlatService.classify_flat(flat), 0)
        self.assertEqual(FlatService.flat_orbit(flat).n_empty, 0)

    def test_matches_flat_orbit(self):
        for flat in flat_symbols(12):
            with self.subTest(flat=repr(flat)):
                self.assertEqual(FlatService.classify_flat(flat), FlatService.flat_orbit(flat).n_empty)

    def test_labels(self):
        labels = {FlatService.checked(flat) for flat in flat_symbols(6)}
        self.assertLessEqual(labels, {0, 1})


class ProlongCommandTest(SimpleTestCase):
    def test_smallest(self):
        out = StringIO()
        call_command('prolong', '1/2', '1/2', '1', '/', '0', '0', '0', stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual(data['flat']['kappa'], 3)
        self.assertEqual(data['value'], {'sign': 1, 'radicand': '1/1'})
        self.assertEqual(data['alpha'], {'j': ['0', '0', '0'], 'm': ['0', '0', '0']})
        self.assertEqual(data['partition'], 0)

    def test_not_flat(self):
        with self.assertRaises(CommandError) as e:
            call_command('prolong', '1', '1', '1', '/', '0', '0', '0', stdout=StringIO())
        self.assertEqual(e.exception.returncode, 2)
