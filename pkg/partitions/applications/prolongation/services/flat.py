import logging
from fractions import Fraction

from racah.exceptions import DomainError, InvariantViolation
from racah.applications.arithmetic.factorial import factorial
from racah.applications.arithmetic.sqrt_rational import SqrtRational
from racah.applications.regge.services import OrbitService
from racah.applications.superalgebra.services.phase import sign
from racah.applications.symbol import choices as symbol_choices
from racah.applications.symbol.services import ParityService, ValidationService
from racah.applications.symbol.values import Symbol3j
from partitions import translates as _
from partitions.applications.prolongation.services.clauses import FlatClauseService
from partitions.applications.prolongation.values import FlatBetaSymbol, UnderlinedSpins
from partitions.applications.selector.services import CalibrationService, ProfileService

logger = logging.getLogger(__name__)


def is_flat_triangle(symbol):
    return any(2 * v == sum(symbol.tj) for v in symbol.tj)


class FlatService:
    @staticmethod
    def detect_flat_forbidden(symbol):
        parity = ParityService.classify_parity(symbol)
        if not parity.is_beta() or parity.primed:
            return None
        if ValidationService.validate_super(symbol) != symbol_choices.VERDICT_INVALID_PARENT:
            return None
        try:
            return FlatBetaSymbol(symbol, parity.kappa)
        except DomainError:
            return None

    @staticmethod
    def prolong_value(flat):
        k, l, m = flat.slots
        plus, minus, tj = flat.base.tjplus, flat.base.tjminus, flat.base.tj
        kappa_part = Fraction(factorial(plus[k] // 2 - 1) * factorial(minus[k] // 2 - 1), factorial(tj[k] - 2))
        sides = Fraction(
            factorial(tj[l] - 1) * factorial(tj[m] - 1),
            factorial(plus[l] // 2) * factorial(minus[l] // 2) * factorial(plus[m] // 2) * factorial(minus[m] // 2),
        )
        return SqrtRational(sign((plus[l] - minus[m]) // 2), kappa_part * sides)

    @staticmethod
    def identify_alpha(flat):
        return Symbol3j(UnderlinedSpins.of(flat).in_columns(flat), flat.base.tm)

    @staticmethod
    def edmonds_flat_value(flat):
        """sqrt(2 j_kappa - 1) times the closed flat 3-j of the shifted spins"""
        k, l, m = flat.slots
        shifted = UnderlinedSpins.of(flat)
        a, b, c = shifted.tj_lambda, shifted.tj_mu, shifted.tj_kappa
        ma, mb, mc = (flat.base.tm[i] for i in (l, m, k))
        radicand = Fraction(
            factorial(a) * factorial(b) * factorial((c + mc) // 2) * factorial((c - mc) // 2),
            factorial(c + 1) * factorial((a + ma) // 2) * factorial((a - ma) // 2)
            * factorial((b + mb) // 2) * factorial((b - mb) // 2),
        )
        closed = SqrtRational(sign(((a + ma) - (b - mb)) // 2), radicand)
        return SqrtRational(1, c + 1) * closed

    @staticmethod
    def underlined_profile(flat, convention=None):
        alpha = FlatService.identify_alpha(flat)
        return ProfileService.selector_profile(alpha, convention or CalibrationService.configured_convention())

    @staticmethod
    def classify_flat(flat, convention=None):
        alpha = FlatService.identify_alpha(flat)
        profile = FlatService.underlined_profile(flat, convention)
        labels = FlatClauseService.labels(profile, alpha.tjplus, alpha.tjminus, flat.slots)
        if not labels:
            logger.error(f'Underlined profile {profile!r} of {flat} matches no clause')
            raise InvariantViolation(f'{_.unclassifiable}: {profile!r}')
        if len(labels) > 1:
            logger.error(f'Underlined profile {profile!r} of {flat} matches labels {list(labels)}')
            raise InvariantViolation(f'{_.ambiguous} {list(labels)}: {profile!r}')
        return labels[0]

    @staticmethod
    def flat_orbit(flat):
        """Regge closure of the identified alpha symbol kept to flat triangles"""
        return OrbitService.closure(FlatService.identify_alpha(flat), keep=is_flat_triangle)

    @staticmethod
    def checked(flat, convention=None):
        label = FlatService.classify_flat(flat, convention)
        expected = FlatService.flat_orbit(flat).n_empty
        if label != expected:
            logger.error(f'{flat}: underlined selectors give {label}, flat orbit gives {expected}')
            raise InvariantViolation(f'{_.oracle_disagrees}: {label} != {expected}')
        return label
