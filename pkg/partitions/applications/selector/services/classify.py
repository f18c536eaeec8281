import logging

from racah.exceptions import InvariantViolation, ParityError
from racah.applications.regge.services import OrbitService
from racah.applications.symbol.services import ParityService, ValidationService
from partitions import translates as _
from partitions.applications.selector import choices
from partitions.applications.selector.services.calibration import CalibrationService
from partitions.applications.selector.services.clauses import ClauseService
from partitions.applications.selector.services.profile import ProfileService

logger = logging.getLogger(__name__)


def beta_label(profile, convention):
    """One R_kappa reaches a second class unless no j+ meets a j- of another column"""
    scale = 2 if convention == choices.CONVENTION_ORDERED else 1
    if profile.n0_pm == 0:
        return 1
    if scale <= profile.n0_pm <= 2 * scale:
        return 0
    raise InvariantViolation(f'{_.unclassifiable}: {profile!r}')


class ClassifyService:
    @staticmethod
    def profile(symbol, convention=None):
        return ProfileService.selector_profile(symbol, convention or CalibrationService.configured_convention())

    @staticmethod
    def label(profile):
        labels = ClauseService.labels(profile)
        if not labels:
            raise InvariantViolation(f'{_.unclassifiable}: {profile!r}')
        if len(labels) > 1:
            raise InvariantViolation(f'{_.ambiguous} {list(labels)}: {profile!r}')
        return labels[0]

    @staticmethod
    def classify(symbol, convention=None):
        """Number of classes the Regge orbit adds to the class of `symbol`"""
        profile = ClassifyService.profile(symbol, convention)
        try:
            return ClassifyService.label(profile)
        except InvariantViolation:
            logger.error(f'Selector profile {profile!r} of {symbol} has no single label')
            raise

    @staticmethod
    def classify_super_beta(symbol, convention=None):
        if not ParityService.classify_parity(symbol).is_beta():
            raise ParityError(f'{symbol} is not a beta symbol')
        convention = convention or CalibrationService.configured_convention()
        return beta_label(ProfileService.selector_profile(symbol, convention), convention)

    @staticmethod
    def classify_super_partition(symbol, convention=None):
        ValidationService.check_super(symbol)
        if ParityService.classify_parity(symbol).is_beta():
            return ClassifyService.classify_super_beta(symbol, convention)
        return ClassifyService.classify(symbol, convention)

    @staticmethod
    def oracle(symbol, beta=False):
        report = OrbitService.beta_orbit(symbol) if beta else OrbitService.orbit(symbol)
        return report.n_empty

    @staticmethod
    def checked(symbol, super_symbol=False, convention=None):
        """Selector label after confirming it against the orbit oracle"""
        beta = super_symbol and ParityService.classify_parity(symbol).is_beta()
        if super_symbol:
            label = ClassifyService.classify_super_partition(symbol, convention)
        else:
            ValidationService.check_classical(symbol)
            label = ClassifyService.classify(symbol, convention)
        expected = ClassifyService.oracle(symbol, beta)
        if expected == choices.FORBIDDEN_LABEL:
            raise InvariantViolation(f'{_.forbidden_label}: {symbol}')
        if label != expected:
            logger.error(f'{symbol}: selectors give {label}, orbit gives {expected}')
            raise InvariantViolation(f'{_.oracle_disagrees}: {label} != {expected}')
        return label
