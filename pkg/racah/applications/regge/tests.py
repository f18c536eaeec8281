import json
from io import StringIO

from django.test import SimpleTestCase
from django.core.management import call_command
from django.core.management.base import CommandError

from racah.exceptions import DomainError, ParityError
from racah.applications.classical.services import WignerService
from racah.applications.regge import choices
from racah.applications.regge.services import OrbitService, SymmetryService, TransformService
from racah.applications.symbol.services import EnumerationService
from racah.applications.symbol.values import Symbol3j


def S(text):
    return Symbol3j.parse(text.split())


def rows(array):
    return tuple(tuple(str(v) for v in row) for row in array.rows)


# All nine Regge entries distinct
GENERIC = '7/2 7 9/2 / 1/2 2 -5/2'


class ReggeArrayTest(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(
            rows(TransformService.regge_array(S('1 1 0 / 1 -1 0'))),
            (('0', '0', '2'), ('0', '2', '0'), ('2', '0', '0')),
        )
        self.assertEqual(rows(TransformService.regge_array(S('0 0 0 / 0 0 0'))), (('0',) * 3,) * 3)
        self.assertEqual(rows(TransformService.regge_array(S('1 1 1 / 0 0 0'))), (('1',) * 3,) * 3)

    def test_magic(self):
        for symbol in EnumerationService.classical(6):
            array = TransformService.regge_array(symbol)
            self.assertEqual(array.line_sums(), {symbol.perimeter})
            self.assertTrue(all(v >= 0 and v.is_integer() for row in array.rows for v in row))


class ApplyReggeTest(SimpleTestCase):
    def test_fixed_point(self):
        symbol = S('1 1 1 / 0 0 0')
        self.assertEqual(TransformService.apply_regge(symbol, choices.R1), symbol)

    def test_r4(self):
        self.assertEqual(TransformService.apply_regge(S('1 1 0 / 1 -1 0'), choices.R4), S('1 0 1 / -1 0 1'))

    def test_r3_fixed_point(self):
        for text in ('1 1 2 / 0 0 0', '3/2 3/2 1 / 0 0 0', '2 2 3 / 0 0 0'):
            symbol = S(text)
            self.assertEqual(TransformService.apply_regge(symbol, choices.R3), symbol)

    def test_r2_fixed_point(self):
        symbol = S('1 1 1 / 1 0 -1')
        self.assertEqual(TransformService.apply_regge(symbol, choices.R2), symbol)
        self.assertNotEqual(symbol.negate(), symbol)

    def test_cyclic_conjugates(self):
        for symbol in EnumerationService.classical(6):
            apply = TransformService.apply_regge
            self.assertEqual(
                apply(symbol, choices.R2),
                apply(symbol.permute((1, 2, 0)), choices.R1).permute((2, 0, 1)),
            )
            self.assertEqual(
                apply(symbol, choices.R3),
                apply(symbol.permute((2, 0, 1)), choices.R1).permute((1, 2, 0)),
            )

    def test_quarter_integer(self):
        with self.assertRaises(DomainError):
            TransformService.apply_regge(S('1/2 1/2 1 / 0 0 0'), choices.R1)

    def test_value_preserved(self):
        for symbol in EnumerationService.classical(6):
            value = WignerService.compute_3j(symbol)
            for kappa in choices.REGGE_TRANSFORMS:
                image = TransformService.apply_regge(symbol, kappa)
                self.assertEqual(sum(image.tj), sum(symbol.tj))
                self.assertEqual(WignerService.compute_3j(image), value, (symbol, kappa))

    def test_involution_up_to_class(self):
        for symbol in EnumerationService.classical(6):
            for kappa in choices.COLUMN_TRANSFORMS:
                twice = TransformService.apply_regge(TransformService.apply_regge(symbol, kappa), kappa)
                self.assertEqual(SymmetryService.classical_set(twice), SymmetryService.classical_set(symbol))


class ClassicalSetTest(SimpleTestCase):
    def test_cyclic(self):
        self.assertEqual(
            SymmetryService.classical_set(S('1 1 0 / 1 -1 0')),
            SymmetryService.classical_set(S('0 1 1 / 0 1 -1')),
        )

    def test_negation(self):
        self.assertEqual(
            SymmetryService.classical_set(S('1 1 0 / 1 -1 0')),
            SymmetryService.classical_set(S('1 1 0 / -1 1 0')),
        )

    def test_swap_and_negation(self):
        # columns 2 and 3 exchanged, then every m negated
        self.assertEqual(
            SymmetryService.classical_set(S('1 1 0 / 1 -1 0')),
            SymmetryService.classical_set(S('1 0 1 / -1 0 1')),
        )

    def test_distinct(self):
        self.assertNotEqual(
            SymmetryService.classical_set(S('1 1 0 / 1 -1 0')),
            SymmetryService.classical_set(S('1 1 0 / 0 0 0')),
        )

    def test_canonical_is_least_image(self):
        symbol = S(GENERIC)
        canonical = SymmetryService.classical_set(symbol).canonical
        self.assertEqual(canonical, min(image for image, _, _ in symbol.images()))
        self.assertTrue(SymmetryService.is_canonical(canonical))


class OrbitTest(SimpleTestCase):
    def test_zero(self):
        report = OrbitService.orbit(S('0 0 0 / 0 0 0'))
        self.assertEqual((len(report), report.n_empty), (1, 0))

    def test_generic(self):
        self.assertEqual(OrbitService.orbit(S(GENERIC)).n_empty, 5)

    def test_all_ones(self):
        self.assertEqual(OrbitService.orbit(S('1 1 1 / 0 0 0')).n_empty, 0)

    def test_closure(self):
        for symbol in EnumerationService.classical(4):
            report = OrbitService.orbit(symbol)
            for image, _, _ in symbol.images():
                self.assertEqual(OrbitService.orbit(image), report)
            for member in report.classes:
                self.assertEqual(OrbitService.orbit(member.canonical), report)

    def test_three_never_occurs(self):
        for symbol in EnumerationService.classical(6, ordered=True):
            self.assertIn(OrbitService.orbit(symbol).n_empty, (0, 1, 2, 4, 5))

    def test_beta_needs_beta(self):
        with self.assertRaises(ParityError):
            OrbitService.beta_orbit(S('1 1 0 / 1 -1 0'))

    def test_member_without_transform(self):
        def refuse(symbol):
            raise ParityError(f'{symbol} is not beta')

        report = OrbitService.closure(S('1 1 0 / 1 -1 0'), refuse)
        self.assertEqual((len(report), report.n_empty), (1, 0))


class OrbitCommandTest(SimpleTestCase):
    def call(self, *args):
        out = StringIO()
        call_command('orbit', *args, stdout=out)
        return json.loads(out.getvalue())

    def test_classical(self):
        data = self.call('1', '1', '1', '/', '0', '0', '0')
        self.assertEqual(data['n_empty'], 0)
        self.assertEqual(data['orbit_classes'], 1)
        self.assertEqual(data['classes'], [{'j': ['1', '1', '1'], 'm': ['0', '0', '0']}])

    def test_invalid(self):
        with self.assertRaises(CommandError) as e:
            call_command('orbit', '1', '1', '3', '/', '0', '0', '0', stdout=StringIO())
        self.assertEqual(e.exception.returncode, 2)
