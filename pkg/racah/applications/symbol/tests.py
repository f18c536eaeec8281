from itertools import permutations

from django.test import SimpleTestCase
from hypothesis import given
import hypothesis.strategies as st

from racah.exceptions import DomainError, InvalidSymbol, ForbiddenParent
from racah.applications.symbol import choices
from racah.applications.symbol.serializers import SymbolSerializer
from racah.applications.symbol.services import DoubletService, EnumerationService, ParityService, ValidationService
from racah.applications.symbol.values import ALPHA, BETA, GAMMA, Column, HalfInt, Symbol3j


def S(text):
    return Symbol3j.parse(text.split())


@st.composite
def columns(draw, tjmax=12):
    tj = draw(st.integers(min_value=0, max_value=tjmax))
    tm = draw(st.integers(min_value=-tj - 1, max_value=tj + 1))
    return Column(HalfInt(tj), HalfInt(tm))


@st.composite
def symbols(draw, tjmax=8):
    tj = [draw(st.integers(min_value=0, max_value=tjmax)) for _ in range(3)]
    tm1 = draw(st.integers(min_value=-tj[0], max_value=tj[0]))
    tm2 = draw(st.integers(min_value=-tj[1], max_value=tj[1]))
    return Symbol3j(tj, [tm1, tm2, -tm1 - tm2])


class HalfIntTest(SimpleTestCase):
    def test_parse_and_render(self):
        for text in ('2', '3/2', '-1/2', '0', '-3'):
            self.assertEqual(str(HalfInt.parse(text)), text)

    def test_strict_parse(self):
        for text in (' 1', '1/4', '2/2', '1.5', '', '1/2 '):
            with self.assertRaises(DomainError):
                HalfInt.parse(text)

    def test_arithmetic(self):
        self.assertEqual(HalfInt.parse('3/2') + HalfInt.parse('1/2'), 2)
        self.assertEqual(HalfInt.parse('1/2').floor(), 0)
        self.assertEqual(HalfInt.parse('-1/2').floor(), -1)


class SymbolTest(SimpleTestCase):
    def test_m_sum_rejected(self):
        with self.assertRaises(InvalidSymbol) as e:
            S('1 1 0 / 1 1 0')
        self.assertEqual(e.exception.verdict, choices.VERDICT_M_SUM)

    def test_grammar(self):
        with self.assertRaises(DomainError):
            Symbol3j.parse('1 1 0 1 -1 0'.split())

    def test_images_are_twelve(self):
        images = list(S('1 2 3 / 1 -1 0').images())
        self.assertEqual(len(images), 12)
        self.assertEqual(len({image for image, _, _ in images}), 12)

    def test_str(self):
        self.assertEqual(str(S('3/2 1/2 1 / 1/2 -1/2 0')), '(3/2 1/2 1; 1/2 -1/2 0)')


class ColumnParityTest(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(ParityService.column_parity(Column('3/2', '1/2')), choices.EV)
        self.assertEqual(ParityService.column_parity(Column('1/2', '0')), choices.OD)
        self.assertEqual(ParityService.column_parity(Column('1', '-1')), choices.EV)

    @given(column=columns())
    def test_plus_and_minus_agree(self, column):
        self.assertEqual((column.tj + column.tm) % 2, (column.tj - column.tm) % 2)


class ClassifyParityTest(SimpleTestCase):
    def test_alpha(self):
        self.assertEqual(ParityService.classify_parity(S('1 1 0 / 1 -1 0')), ALPHA)

    def test_gamma(self):
        self.assertEqual(ParityService.classify_parity(S('1/2 1/2 1/2 / 0 0 0')), GAMMA)

    def test_beta_unprimed(self):
        # columns OD, OD, EV
        parity = ParityService.classify_parity(S('1/2 1/2 1 / 0 0 0'))
        self.assertEqual(parity, BETA(3))
        self.assertEqual(parity.code, 'beta3')

    def test_beta_primed(self):
        # columns EV, EV, OD
        parity = ParityService.classify_parity(S('1 1 1/2 / 1 -1 0'))
        self.assertEqual(parity, BETA(3, primed=True))
        self.assertEqual(parity.code, 'beta3p')

    @given(symbol=symbols())
    def test_permutation_relabels_kappa(self, symbol):
        parity = ParityService.classify_parity(symbol)
        for order in permutations(range(3)):
            image = ParityService.classify_parity(symbol.permute(order))
            self.assertEqual(image.family, parity.family)
            self.assertEqual(image.primed, parity.primed)
            if parity.is_beta():
                self.assertEqual(order[image.kappa - 1], parity.kappa - 1)

    @given(symbol=symbols())
    def test_perimeter_matches_family(self, symbol):
        parity = ParityService.classify_parity(symbol)
        integral = symbol.perimeter.is_integer()
        if parity.family == choices.ALPHA or (parity.is_beta() and not parity.primed):
            self.assertTrue(integral)
        else:
            self.assertFalse(integral)


class DoubletTest(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(DoubletService.recover_doublet(Column('1', '1/2')), HalfInt.parse('1/2'))
        self.assertEqual(DoubletService.recover_doublet(Column('1', '1')), 1)
        self.assertEqual(DoubletService.recover_doublet(Column('7/2', '-1/2')), HalfInt.parse('7/2'))

    @given(column=columns())
    def test_doublet_is_j_or_j_minus_half(self, column):
        if abs(column.tm) > column.tj:
            return
        tl = DoubletService.recover_twice(column.tj, column.tm)
        self.assertIn(column.tj - tl, (0, 1))

    def test_parent(self):
        parent = DoubletService.parent(S('7/2 2 3/2 / -1/2 1/2 0'))
        self.assertEqual(parent, S('7/2 3/2 1 / -1/2 1/2 0'))


class ValidateClassicalTest(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(ValidationService.validate_classical(S('1 1 0 / 1 -1 0')), choices.VERDICT_VALID)
        self.assertEqual(ValidationService.validate_classical(S('1 1 3 / 0 0 0')), choices.VERDICT_TRIANGLE)
        self.assertEqual(ValidationService.validate_classical(S('1/2 1/2 1/2 / 0 0 0')), choices.VERDICT_ODD_COLUMN)

    def test_projection(self):
        self.assertEqual(ValidationService.validate_classical(S('1 1 2 / 2 -2 0')), choices.VERDICT_PROJECTION)

    def test_check_raises(self):
        with self.assertRaises(InvalidSymbol) as e:
            ValidationService.check_classical(S('1 1 3 / 0 0 0'))
        self.assertEqual(e.exception.verdict, choices.VERDICT_TRIANGLE)


class ValidateSuperTest(SimpleTestCase):
    def test_no_parent(self):
        symbol = S('7/2 2 3/2 / -1/2 1/2 0')
        self.assertEqual(ValidationService.validate_super(symbol), choices.VERDICT_INVALID_PARENT)
        with self.assertRaises(ForbiddenParent):
            ValidationService.check_super(symbol)

    def test_gamma_valid(self):
        self.assertEqual(ValidationService.validate_super(S('1/2 1/2 1/2 / 0 0 0')), choices.VERDICT_VALID)

    def test_flat_candidate(self):
        self.assertEqual(ValidationService.validate_super(S('1/2 1/2 1 / 0 0 0')), choices.VERDICT_INVALID_PARENT)

    def test_j_triangle(self):
        self.assertEqual(ValidationService.validate_super(S('1/2 1/2 2 / 0 0 0')), choices.VERDICT_INVALID_J_TRIANGLE)

    def test_projection(self):
        self.assertEqual(ValidationService.validate_super(S('1 1 1 / 2 -1 -1')), choices.VERDICT_INVALID_PROJECTION)

    @given(column=columns(tjmax=10))
    def test_doublet_projection_check(self, column):
        if abs(column.tm) > column.tj:
            return
        tl = DoubletService.recover_twice(column.tj, column.tm)
        self.assertLessEqual(abs(column.tm), tl)


class SymbolSerializerTest(SimpleTestCase):
    def test_render(self):
        data = SymbolSerializer(S('3/2 1 1/2 / -1/2 0 1/2')).data
        self.assertEqual(data, {'j': ['3/2', '1', '1/2'], 'm': ['-1/2', '0', '1/2']})

    def test_read(self):
        serializer = SymbolSerializer(data={'j': ['1', '1', '0'], 'm': ['1', '-1', '0']})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), S('1 1 0 / 1 -1 0'))

    def test_bad_m_sum(self):
        serializer = SymbolSerializer(data={'j': ['1', '1', '0'], 'm': ['1', '1', '0']})
        self.assertFalse(serializer.is_valid())


class EnumerationTest(SimpleTestCase):
    def test_zero_cutoff(self):
        self.assertEqual(list(EnumerationService.classical(0)), [S('0 0 0 / 0 0 0')])

    def test_classical_are_valid(self):
        for symbol in EnumerationService.classical(3):
            self.assertTrue(ValidationService.is_classical(symbol))

    def test_super_half(self):
        symbols = list(EnumerationService.super(1))
        self.assertIn(S('1/2 1/2 1/2 / 0 0 0'), symbols)
        self.assertIn(S('0 0 0 / 0 0 0'), symbols)

    def test_ordered_triples(self):
        for tj in EnumerationService.triples(6, ordered=True):
            self.assertEqual(tuple(sorted(tj)), tj)
