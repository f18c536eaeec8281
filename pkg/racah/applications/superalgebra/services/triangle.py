from fractions import Fraction

from racah.exceptions import DomainError
from racah.applications.arithmetic.factorial import factorial
from racah.applications.arithmetic.sqrt_rational import SqrtRational
from racah.applications.symbol.values import HalfInt
from racah.applications.classical.services.triangle import is_triangle


class SuperTriangleService:
    @staticmethod
    def super_delta_twice(ta, tb, tc):
        """Supertriangle on doubled spins; brackets are integer parts"""
        if not is_triangle(ta, tb, tc):
            raise DomainError(f'({ta}/2, {tb}/2, {tc}/2) violates the triangle condition')
        numerator = (
            factorial((ta + tb - tc) // 2)
            * factorial((ta - tb + tc) // 2)
            * factorial((-ta + tb + tc) // 2)
        )
        return SqrtRational(1, Fraction(numerator, factorial((ta + tb + tc + 1) // 2)))

    @staticmethod
    def super_delta(a, b, c):
        return SuperTriangleService.super_delta_twice(HalfInt.of(a).twice, HalfInt.of(b).twice, HalfInt.of(c).twice)
