import json
from io import StringIO
from unittest import mock
from fractions import Fraction

from django.test import SimpleTestCase
from django.core.management import call_command, execute_from_command_line
from hypothesis import assume, given, settings
import hypothesis.strategies as st
from sympy import Rational
from sympy.physics.wigner import wigner_3j

from racah.exceptions import DomainError, InvalidSymbol
from racah.applications.arithmetic.sqrt_rational import SqrtRational
from racah.applications.classical.services import OracleService, TriangleService, WignerService
from racah.applications.symbol.services import EnumerationService
from racah.applications.symbol.values import Symbol3j


def S(text):
    return Symbol3j.parse(text.split())


def sympy_value(symbol):
    expr = wigner_3j(*(Rational(v, 2) for v in symbol.tj + symbol.tm))
    if expr == 0:
        return SqrtRational.zero()
    square = expr ** 2
    return SqrtRational(1 if expr.is_positive else -1, Fraction(int(square.p), int(square.q)))


@st.composite
def classical_symbols(draw, tjmax=10):
    tj1 = draw(st.integers(min_value=0, max_value=tjmax))
    tj2 = draw(st.integers(min_value=0, max_value=tjmax))
    tj3 = draw(st.sampled_from(range(abs(tj1 - tj2), min(tj1 + tj2, tjmax) + 1, 2)))
    tm1 = draw(st.sampled_from(range(-tj1, tj1 + 1, 2)))
    tm2 = draw(st.sampled_from(range(-tj2, tj2 + 1, 2)))
    assume(abs(tm1 + tm2) <= tj3)
    return Symbol3j((tj1, tj2, tj3), (tm1, tm2, -tm1 - tm2))


class TriangleDeltaTest(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(TriangleService.delta(0, 0, 0), SqrtRational.one())
        self.assertEqual(TriangleService.delta(1, 1, 1), SqrtRational(1, Fraction(1, 24)))
        self.assertEqual(TriangleService.delta('1/2', '1/2', 1), SqrtRational(1, Fraction(1, 6)))

    def test_triangle_violation(self):
        with self.assertRaises(DomainError):
            TriangleService.delta(1, 1, 3)

    def test_half_perimeter(self):
        with self.assertRaises(DomainError):
            TriangleService.delta('1/2', '1/2', '1/2')


class Compute3jTest(SimpleTestCase):
    def test_zero_symbol(self):
        self.assertEqual(WignerService.v_factor(S('0 0 0 / 0 0 0')), SqrtRational.one())
        self.assertEqual(WignerService.compute_3j(S('0 0 0 / 0 0 0')), SqrtRational.one())

    def test_stretched(self):
        self.assertEqual(WignerService.compute_3j(S('1 1 0 / 1 -1 0')), SqrtRational(1, Fraction(1, 3)))

    def test_odd_perimeter_zero(self):
        self.assertEqual(WignerService.compute_3j(S('1 1 1 / 0 0 0')), SqrtRational.zero())

    def test_flat(self):
        # (j1 j2 j1+j2; m1 m2 -m1-m2), closed form
        self.assertEqual(WignerService.compute_3j(S('1 1 2 / 1 1 -2')), SqrtRational(1, Fraction(1, 5)))

    def test_invalid(self):
        with self.assertRaises(InvalidSymbol):
            WignerService.compute_3j(S('1/2 1/2 1/2 / 1/2 -1/2 0'))

    def test_matches_sympy(self):
        for symbol in EnumerationService.classical(4):
            self.assertEqual(WignerService.compute_3j(symbol), sympy_value(symbol), symbol)

    def test_matches_oracle(self):
        for symbol in EnumerationService.classical(6):
            self.assertEqual(WignerService.compute_3j(symbol), OracleService.racah_oracle(symbol), symbol)

    @settings(max_examples=300, deadline=None)
    @given(symbol=classical_symbols())
    def test_matches_oracle_large(self, symbol):
        self.assertEqual(WignerService.compute_3j(symbol), OracleService.racah_oracle(symbol))


class SymmetryTest(SimpleTestCase):
    def test_images(self):
        for symbol in EnumerationService.classical(6):
            value = WignerService.compute_3j(symbol)
            for image, order, negated in symbol.images():
                expected = value * WignerService.symmetry_phase(symbol, order, negated)
                self.assertEqual(WignerService.compute_3j(image), expected, (symbol, order, negated))

    def test_cyclic_has_no_phase(self):
        symbol = S('1 2 2 / 1 -1 0')
        self.assertEqual(WignerService.symmetry_phase(symbol, (1, 2, 0)), 1)
        self.assertEqual(WignerService.symmetry_phase(symbol, (1, 0, 2)), -1)


class OrthogonalityTest(SimpleTestCase):
    def test_sum_of_squares(self):
        # fixed m3, summed over m1 with m2 = -m1 - m3
        for tj in EnumerationService.triples(6):
            if sum(tj) % 2:
                continue
            for tm3 in range(-tj[2], tj[2] + 1, 2):
                total = Fraction(0)
                for tm1 in range(-tj[0], tj[0] + 1, 2):
                    tm2 = -tm1 - tm3
                    if abs(tm2) <= tj[1]:
                        total += (tj[2] + 1) * WignerService.compute_3j(Symbol3j(tj, (tm1, tm2, tm3))).square()
                self.assertEqual(total, 1, (tj, tm3))


class EvalCommandTest(SimpleTestCase):
    def run_argv(self, *args):
        out, err = StringIO(), StringIO()
        with mock.patch('sys.stdout', out), mock.patch('sys.stderr', err):
            execute_from_command_line(['manage.py', 'eval', *args])
        return out.getvalue()

    def test_value(self):
        out = StringIO()
        call_command('eval', '1', '1', '0', '/', '1', '-1', '0', stdout=out)
        self.assertEqual(json.loads(out.getvalue()), {'sign': 1, 'radicand': '1/3'})

    def test_argv(self):
        data = json.loads(self.run_argv('--decimal', '1', '1', '0', '/', '1', '-1', '0'))
        self.assertEqual((data['sign'], data['radicand']), (1, '1/3'))
        self.assertIn('decimal', data)

    def test_argv_invalid_symbol(self):
        with self.assertRaises(SystemExit) as e:
            self.run_argv('1', '1', '3', '/', '0', '0', '0')
        self.assertEqual(e.exception.code, 2)

    def test_argv_malformed(self):
        with self.assertRaises(SystemExit) as e:
            self.run_argv('1', '1', '0', '1', '-1', '0')
        self.assertEqual(e.exception.code, 1)
