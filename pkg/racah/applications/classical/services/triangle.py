from fractions import Fraction

from racah.exceptions import DomainError
from racah.applications.arithmetic.factorial import factorial
from racah.applications.arithmetic.sqrt_rational import SqrtRational
from racah.applications.symbol.values import HalfInt


def is_triangle(ta, tb, tc):
    return abs(ta - tb) <= tc <= ta + tb


class TriangleService:
    @staticmethod
    def delta_twice(ta, tb, tc):
        """Triangle coefficient on doubled spins"""
        if not is_triangle(ta, tb, tc):
            raise DomainError(f'({ta}/2, {tb}/2, {tc}/2) violates the triangle condition')
        if (ta + tb + tc) % 2:
            raise DomainError(f'({ta}/2, {tb}/2, {tc}/2) has a half-odd perimeter')
        numerator = (
            factorial((ta + tb - tc) // 2)
            * factorial((ta - tb + tc) // 2)
            * factorial((-ta + tb + tc) // 2)
        )
        return SqrtRational(1, Fraction(numerator, factorial((ta + tb + tc) // 2 + 1)))

    @staticmethod
    def delta(a, b, c):
        return TriangleService.delta_twice(HalfInt.of(a).twice, HalfInt.of(b).twice, HalfInt.of(c).twice)
