import logging
from functools import lru_cache

from racah.exceptions import InvariantViolation
from racah.utils import choice_setting, setting
from racah.applications.arithmetic.factorial import factorial
from racah.applications.arithmetic.sqrt_rational import SqrtRational
from racah.applications.classical.services import WignerService
from racah.applications.superalgebra import choices
from racah.applications.superalgebra.services.ifactor import IFactorService
from racah.applications.superalgebra.services.phase import PhaseService, sign
from racah.applications.superalgebra.services.scalar import ScalarFactorService
from racah.applications.superalgebra.services.triangle import SuperTriangleService
from racah.applications.symbol.services import DoubletService, EnumerationService, ValidationService
from racah.applications.symbol.values import HalfInt

logger = logging.getLogger(__name__)


class SuperValueService:
    @staticmethod
    def product(symbol):
        ValidationService.check_super(symbol)
        parent = DoubletService.parent(symbol)
        return ScalarFactorService.scalar_factor_twice(symbol.tj, parent.tj) * WignerService.compute_3j(parent)

    @staticmethod
    def direct(symbol, variant=choices.PHASE_PLUS_PLUS):
        ValidationService.check_super(symbol)
        jp = tuple(v // 2 for v in symbol.tjplus)
        jm = tuple(v // 2 for v in symbol.tjminus)
        exponent = jp[0] - jm[1] + PhaseService.variant_exponent(symbol, variant)
        radicand = 1
        for a, b in zip(jp, jm):
            radicand *= factorial(a) * factorial(b)
        coefficient = sign(exponent) * IFactorService.i_factor(symbol) * WignerService.z_sum(jp, jm)
        return SuperTriangleService.super_delta_twice(*symbol.tj) * SqrtRational.make(coefficient, radicand)

    @staticmethod
    @lru_cache(maxsize=None)
    def resolve_phase_variant(tjmax):
        """First phase reading of the direct formula agreeing with the product path"""
        symbols = list(EnumerationService.super(tjmax))
        products = [SuperValueService.product(s) for s in symbols]
        for variant in choices.PHASE_VARIANTS:
            mismatch = next(
                (s for s, value in zip(symbols, products) if SuperValueService.direct(s, variant) != value),
                None,
            )
            if mismatch is None:
                logger.info(f'Super phase resolved to "{variant}" over {len(symbols)} symbols up to j={HalfInt(tjmax)}')
                return variant
            logger.debug(f'Phase variant "{variant}" rejected at {mismatch}')
        raise InvariantViolation(f'no phase variant agrees with the product path up to j={HalfInt(tjmax)}')

    @staticmethod
    def configured_variant():
        variant = choice_setting('SUPER_PHASE_VARIANT', choices.PHASE_VARIANTS + (choices.PHASE_AUTO,), choices.PHASE_PLUS_PLUS)
        if variant == choices.PHASE_AUTO:
            return SuperValueService.resolve_phase_variant(HalfInt.parse(setting('SUPER_PHASE_JMAX', '3')).twice)
        return variant

    @staticmethod
    def compute_super_3j(symbol, path=choices.PATH_PRODUCT):
        if path == choices.PATH_PRODUCT:
            return SuperValueService.product(symbol)
        if path == choices.PATH_DIRECT:
            return SuperValueService.direct(symbol, SuperValueService.configured_variant())
        product = SuperValueService.product(symbol)
        direct = SuperValueService.direct(symbol, SuperValueService.configured_variant())
        if product != direct:
            raise InvariantViolation(f'{symbol}: product path gives {product}, direct path gives {direct}')
        return product
