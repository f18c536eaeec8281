from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given
import hypothesis.strategies as st

from racah.exceptions import DomainError
from racah.applications.arithmetic.factorial import FactorialTable, factorial
from racah.applications.arithmetic.serializers import SqrtRationalSerializer
from racah.applications.arithmetic.sqrt_rational import SqrtRational, make_sqrt_rational

rationals = st.fractions(min_value=-10 ** 6, max_value=10 ** 6, max_denominator=10 ** 6)
radicands = st.fractions(min_value=0, max_value=10 ** 6, max_denominator=10 ** 6)


class MakeSqrtRationalTest(SimpleTestCase):
    def test_folds_coefficient(self):
        self.assertEqual(make_sqrt_rational(Fraction(1, 2), 8), SqrtRational(1, 2))

    def test_zero_coefficient(self):
        value = make_sqrt_rational(0, 5)
        self.assertEqual((value.sign, value.radicand), (0, 0))

    def test_negative_identity(self):
        value = make_sqrt_rational(-1, Fraction(1, 3))
        self.assertEqual((value.sign, value.radicand), (-1, Fraction(1, 3)))

    def test_negative_radicand(self):
        with self.assertRaises(DomainError):
            make_sqrt_rational(1, -2)

    def test_sign_zero_iff_radicand_zero(self):
        with self.assertRaises(DomainError):
            SqrtRational(0, 3)
        with self.assertRaises(DomainError):
            SqrtRational(1, 0)

    @given(coefficient=rationals, radicand=radicands, scale=st.integers(min_value=1, max_value=1000))
    def test_canonical_under_refactoring(self, coefficient, radicand, scale):
        # c * sqrt(r) == (c / s) * sqrt(r * s**2)
        left = make_sqrt_rational(coefficient, radicand)
        right = make_sqrt_rational(coefficient / scale, radicand * scale * scale)
        self.assertEqual(left, right)
        self.assertEqual(hash(left), hash(right))


class MultiplyTest(SimpleTestCase):
    def test_sqrt2_squared(self):
        root2 = SqrtRational(1, 2)
        self.assertEqual(root2 * root2, SqrtRational(1, 4))
        self.assertTrue((root2 * root2).is_rational())

    def test_signs(self):
        self.assertEqual(SqrtRational(-1, Fraction(1, 3)) * SqrtRational(1, 3), SqrtRational(-1, 1))

    def test_absorbing_zero(self):
        self.assertEqual(SqrtRational(1, 7) * SqrtRational.zero(), SqrtRational.zero())

    def test_division(self):
        self.assertEqual(SqrtRational(1, 2) / SqrtRational(-1, 8), SqrtRational(-1, Fraction(1, 4)))
        with self.assertRaises(DomainError):
            SqrtRational(1, 2) / SqrtRational.zero()

    @given(a=rationals, b=radicands, c=rationals, d=radicands, e=rationals, f=radicands)
    def test_commutative_associative(self, a, b, c, d, e, f):
        x, y, z = make_sqrt_rational(a, b), make_sqrt_rational(c, d), make_sqrt_rational(e, f)
        self.assertEqual(x * y, y * x)
        self.assertEqual((x * y) * z, x * (y * z))

    @given(a=rationals, b=radicands)
    def test_self_product_is_positive_square(self, a, b):
        x = make_sqrt_rational(a, b)
        square = x * x
        self.assertIn(square.sign, (0, 1))
        self.assertEqual(square.radicand, x.radicand ** 2)

    @given(p=rationals, r=rationals)
    def test_rational_arithmetic_is_exact(self, p, r):
        self.assertEqual((p + r) - r, p)


class FactorialTest(SimpleTestCase):
    def test_values(self):
        self.assertEqual(factorial(0), 1)
        self.assertEqual(factorial(5), 120)
        self.assertEqual(factorial(20), 2432902008176640000)

    def test_iterated_multiplication_oracle(self):
        table = FactorialTable()
        product = 1
        for n in range(1, 60):
            product *= n
            self.assertEqual(table(n), product)
        self.assertEqual(len(table), 60)

    def test_negative_argument(self):
        with self.assertRaises(DomainError):
            factorial(-1)
        with self.assertRaises(DomainError):
            factorial(Fraction(1, 2))


class DecimalRenderingTest(SimpleTestCase):
    def test_twelve_digits(self):
        self.assertEqual(SqrtRational(1, 2).to_decimal(12), '1.41421356237')
        self.assertEqual(SqrtRational(-1, Fraction(1, 3)).to_decimal(12), '-0.577350269189')
        self.assertEqual(SqrtRational(1, 4).to_decimal(3), '2.00')
        self.assertEqual(SqrtRational.zero().to_decimal(12), '0')


class SqrtRationalSerializerTest(SimpleTestCase):
    def test_representation(self):
        self.assertEqual(SqrtRationalSerializer(SqrtRational(1, Fraction(1, 3))).data, {'sign': 1, 'radicand': '1/3'})
        self.assertEqual(SqrtRationalSerializer(SqrtRational(-1, 4)).data, {'sign': -1, 'radicand': '4/1'})
        self.assertEqual(SqrtRationalSerializer(SqrtRational.zero()).data, {'sign': 0, 'radicand': '0/1'})

    def test_parse(self):
        serializer = SqrtRationalSerializer(data={'sign': -1, 'radicand': '2/3'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), SqrtRational(-1, Fraction(2, 3)))

    def test_rejects_unreduced_and_inconsistent(self):
        self.assertFalse(SqrtRationalSerializer(data={'sign': 1, 'radicand': '2/4'}).is_valid())
        self.assertFalse(SqrtRationalSerializer(data={'sign': 0, 'radicand': '1/2'}).is_valid())
        self.assertFalse(SqrtRationalSerializer(data={'sign': 1, 'radicand': '1.5'}).is_valid())
