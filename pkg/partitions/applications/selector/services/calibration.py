import logging
from functools import lru_cache

from racah.exceptions import InvariantViolation
from racah.utils import choice_setting, setting
from racah.applications.regge.services import OrbitService, SymmetryService
from racah.applications.symbol.services import EnumerationService
from racah.applications.symbol.values import HalfInt
from partitions.applications.selector import choices
from partitions.applications.selector.services.clauses import ClauseService
from partitions.applications.selector.services.profile import ProfileService
from partitions.applications.selector.values import CalibrationRecord

logger = logging.getLogger(__name__)

CONVENTIONS = tuple(code for code, _ in choices.CONVENTION)


class CalibrationService:
    @staticmethod
    def agrees(symbol, convention, expected):
        labels = ClauseService.labels(ProfileService.selector_profile(symbol, convention))
        return labels == (expected,)

    @staticmethod
    @lru_cache(maxsize=None)
    def calibrate(tjmax):
        """Score both pair conventions against the orbit oracle on every
        canonical classical symbol up to tjmax/2 and keep the first one
        that never disagrees."""
        agreements = dict.fromkeys(CONVENTIONS, 0)
        total = 0
        for symbol in EnumerationService.classical(tjmax, ordered=True):
            if not SymmetryService.is_canonical(symbol):
                continue
            total += 1
            expected = OrbitService.orbit(symbol).n_empty
            for convention in CONVENTIONS:
                if CalibrationService.agrees(symbol, convention, expected):
                    agreements[convention] += 1
        chosen = next((c for c in CONVENTIONS if agreements[c] == total), None)
        if chosen is None:
            logger.error(f'No pair convention agrees with the orbit oracle: {agreements} of {total}')
            raise InvariantViolation(f'no pair convention reproduces the orbit oracle up to j={HalfInt(tjmax)}')
        logger.info(f'Pair convention calibrated to "{chosen}" on {total} classes up to j={HalfInt(tjmax)}')
        return CalibrationRecord(HalfInt(tjmax), total, agreements, chosen)

    @staticmethod
    def calibration_jmax():
        return HalfInt.parse(str(setting('SELECTOR_CALIBRATION_JMAX', '4'))).twice

    @staticmethod
    def configured_convention():
        convention = choice_setting(
            'SELECTOR_CONVENTION',
            CONVENTIONS + (choices.CONVENTION_AUTO,),
            choices.CONVENTION_UNORDERED,
        )
        if convention == choices.CONVENTION_AUTO:
            return CalibrationService.calibrate(CalibrationService.calibration_jmax()).chosen
        return convention
