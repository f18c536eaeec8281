from django.core.management.base import CommandError

from racah.commands import SymbolCommand, EXIT_INVALID_SYMBOL
from racah.exceptions import InvariantViolation
from racah.applications.symbol.serializers import SymbolSerializer
from racah.applications.superalgebra.services import SuperValueService
from partitions import translates as _
from partitions.applications.prolongation.serializers import FlatBetaSymbolSerializer
from partitions.applications.prolongation.services import FlatService


class Command(SymbolCommand):
    help = "Print the prolonged value of a forbidden flat beta symbol and its alpha counterpart."

    def run(self, symbol, **options):
        flat = FlatService.detect_flat_forbidden(symbol)
        if flat is None:
            raise CommandError(f'{symbol}: {_.not_flat_forbidden}', returncode=EXIT_INVALID_SYMBOL)
        value = FlatService.prolong_value(flat)
        alpha = FlatService.identify_alpha(flat)
        if SuperValueService.compute_super_3j(alpha) != value:
            raise InvariantViolation(f'{symbol}: {_.prolongation_mismatch}')
        return {
            'flat': FlatBetaSymbolSerializer(flat).data,
            'value': self.value_data(value, options.get("decimal")),
            'alpha': SymbolSerializer(alpha).data,
            'partition': FlatService.checked(flat),
        }
