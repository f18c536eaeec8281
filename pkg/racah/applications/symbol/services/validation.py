import logging

from racah.exceptions import InvalidSymbol, ForbiddenParent
from racah.applications.symbol import choices
from racah.applications.symbol.services.doublet import DoubletService

logger = logging.getLogger(__name__)


def triangle(ta, tb, tc):
    return abs(ta - tb) <= tc <= ta + tb


class ValidationService:
    @staticmethod
    def validate_classical(symbol):
        tj, tm = symbol.tj, symbol.tm
        if any((a + b) % 2 for a, b in zip(tj, tm)):
            return choices.VERDICT_ODD_COLUMN
        if sum(tj) % 2:
            return choices.VERDICT_HALF_PERIMETER
        if not triangle(*tj):
            return choices.VERDICT_TRIANGLE
        if any(abs(b) > a for a, b in zip(tj, tm)):
            return choices.VERDICT_PROJECTION
        return choices.VERDICT_VALID

    @staticmethod
    def validate_super(symbol):
        tj, tm = symbol.tj, symbol.tm
        if not triangle(*tj):
            return choices.VERDICT_INVALID_J_TRIANGLE
        if any(abs(b) > a for a, b in zip(tj, tm)):
            return choices.VERDICT_INVALID_PROJECTION
        tl = DoubletService.parent_spins(symbol)
        if sum(tl) % 2 or not triangle(*tl):
            return choices.VERDICT_INVALID_PARENT
        if any(abs(b) > a for a, b in zip(tl, tm)):
            return choices.VERDICT_INVALID_PROJECTION
        return choices.VERDICT_VALID

    @staticmethod
    def is_classical(symbol):
        return ValidationService.validate_classical(symbol) == choices.VERDICT_VALID

    @staticmethod
    def is_super(symbol):
        return ValidationService.validate_super(symbol) == choices.VERDICT_VALID

    @staticmethod
    def check_classical(symbol):
        verdict = ValidationService.validate_classical(symbol)
        if verdict != choices.VERDICT_VALID:
            raise InvalidSymbol(verdict, f'{symbol}: {choices.verdict_message(verdict)}')
        return symbol

    @staticmethod
    def check_super(symbol):
        verdict = ValidationService.validate_super(symbol)
        if verdict == choices.VERDICT_INVALID_PARENT:
            logger.debug(f'{symbol} has no so(3) parent')
            raise ForbiddenParent(
                verdict,
                f'{symbol}: {choices.verdict_message(verdict)}',
                flat_index=ValidationService.flat_index(symbol),
            )
        if verdict != choices.VERDICT_VALID:
            raise InvalidSymbol(verdict, f'{symbol}: {choices.verdict_message(verdict)}')
        return symbol

    @staticmethod
    def flat_index(symbol):
        """kappa with j_kappa = j_lambda + j_mu, or None"""
        tj = symbol.tj
        for kappa in range(3):
            if 2 * tj[kappa] == sum(tj) and tj[kappa] > 0:
                return kappa + 1
        return None
