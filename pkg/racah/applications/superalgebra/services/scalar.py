from racah.exceptions import DomainError
from racah.applications.classical.services import TriangleService
from racah.applications.symbol.services import DoubletService
from racah.applications.symbol.values import HalfInt
from racah.applications.superalgebra.services.ifactor import IFactorService
from racah.applications.superalgebra.services.phase import PhaseService, sign
from racah.applications.superalgebra.services.triangle import SuperTriangleService


class ScalarFactorService:
    @staticmethod
    def scalar_factor_twice(tj, tl):
        if any(a - b not in (0, 1) for a, b in zip(tj, tl)):
            raise DomainError(f'l={tl} is not a doublet of 2j={tj}')
        delta_l = TriangleService.delta_twice(*tl)
        delta_s = SuperTriangleService.super_delta_twice(*tj)
        if sum(tj) % 2 == 0:
            magnitude = delta_s / delta_l
        else:
            magnitude = delta_l / delta_s
        return magnitude * sign(PhaseService.scalar_exponent(tj, tl))

    @staticmethod
    def scalar_factor(j, l):
        return ScalarFactorService.scalar_factor_twice(
            tuple(HalfInt.of(v).twice for v in j),
            tuple(HalfInt.of(v).twice for v in l),
        )

    @staticmethod
    def super_scalar_factor(symbol):
        """Triangle of the parent times the scalar factor, in closed form"""
        exponent = PhaseService.scalar_exponent(symbol.tj, DoubletService.parent_spins(symbol))
        return SuperTriangleService.super_delta_twice(*symbol.tj) * (sign(exponent) * IFactorService.i_factor(symbol))
