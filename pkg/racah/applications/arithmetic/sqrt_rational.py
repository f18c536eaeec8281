import re
import math
from decimal import Decimal
from fractions import Fraction

from racah.exceptions import DomainError
from racah.utils import setting


def _sign(value):
    return (value > 0) - (value < 0)


class SqrtRational:
    """Exact value sign * sqrt(radicand) with a nonnegative rational radicand.

    The pair (sign, radicand) is canonical: two instances are equal as real
    numbers exactly when their pairs are identical.
    """
    __slots__ = ('_sign', '_radicand')

    def __init__(self, sign, radicand):
        radicand = Fraction(radicand)
        if sign not in (-1, 0, 1):
            raise DomainError(f'sign must be -1, 0 or 1, got {sign!r}')
        if radicand < 0:
            raise DomainError(f'negative radicand {radicand}')
        if (sign == 0) != (radicand == 0):
            raise DomainError('sign is zero exactly when the radicand is zero')
        self._sign = sign
        self._radicand = radicand

    @classmethod
    def make(cls, coefficient, radicand=1):
        radicand = Fraction(radicand)
        if radicand < 0:
            raise DomainError(f'negative radicand {radicand}')
        coefficient = Fraction(coefficient)
        if coefficient == 0 or radicand == 0:
            return cls.zero()
        return cls(_sign(coefficient), coefficient * coefficient * radicand)

    @classmethod
    def zero(cls):
        return cls(0, 0)

    @classmethod
    def one(cls):
        return cls(1, 1)

    @property
    def sign(self):
        return self._sign

    @property
    def radicand(self):
        return self._radicand

    def square(self):
        return self._radicand

    def is_rational(self):
        return _is_square(self._radicand.numerator) and _is_square(self._radicand.denominator)

    def __mul__(self, other):
        if not isinstance(other, SqrtRational):
            if isinstance(other, (int, Fraction)):
                other = SqrtRational.make(other)
            else:
                return NotImplemented
        sign = self._sign * other._sign
        if sign == 0:
            return SqrtRational.zero()
        return SqrtRational(sign, self._radicand * other._radicand)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, SqrtRational):
            if isinstance(other, (int, Fraction)):
                other = SqrtRational.make(other)
            else:
                return NotImplemented
        if other._sign == 0:
            raise DomainError('division by zero')
        if self._sign == 0:
            return SqrtRational.zero()
        return SqrtRational(self._sign * other._sign, self._radicand / other._radicand)

    def __neg__(self):
        return SqrtRational(-self._sign, self._radicand)

    def __abs__(self):
        return SqrtRational(abs(self._sign), self._radicand)

    def __bool__(self):
        return self._sign != 0

    def __eq__(self, other):
        if isinstance(other, SqrtRational):
            return self._sign == other._sign and self._radicand == other._radicand
        if isinstance(other, (int, Fraction)):
            return self == SqrtRational.make(other)
        return NotImplemented

    def __hash__(self):
        return hash((self._sign, self._radicand))

    def __repr__(self):
        return f'SqrtRational({self._sign}, {self._radicand})'

    def __str__(self):
        if self._sign == 0:
            return '0'
        return f"{'-' if self._sign < 0 else '+'}sqrt({self._radicand})"

    def to_decimal(self, digits=None):
        """Display-only rendering truncated to `digits` significant digits"""
        digits = digits or setting('DECIMAL_DIGITS', 12)
        if self._sign == 0:
            return '0'
        p, q = self._radicand.numerator, self._radicand.denominator
        shift = digits
        root = math.isqrt(p * 10 ** (2 * shift) // q)
        while root < 10 ** (digits - 1):
            shift += digits
            root = math.isqrt(p * 10 ** (2 * shift) // q)
        surplus = len(str(root)) - digits
        root //= 10 ** surplus
        shift -= surplus
        text = format(Decimal(root).scaleb(-shift), 'f')
        return f"-{text}" if self._sign < 0 else text


def _is_square(n):
    return math.isqrt(n) ** 2 == n


def make_sqrt_rational(coefficient, radicand):
    return SqrtRational.make(coefficient, radicand)


def format_rational(value):
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


def parse_rational(text):
    if not re.fullmatch(r'-?\d+/\d+', text or ''):
        raise DomainError(f'rational must read p/q, got {text!r}')
    numerator, denominator = text.split('/')
    if int(denominator) == 0:
        raise DomainError('zero denominator')
    return Fraction(int(numerator), int(denominator))
