from django.core.management.base import CommandError

from racah.commands import SymbolCommand, EXIT_INVALID_SYMBOL
from racah.applications.regge import choices
from racah.applications.symbol.services import ParityService
from partitions import translates as _
from partitions.applications.prolongation.services import FlatService
from partitions.applications.selector.serializers import SelectorProfileSerializer
from partitions.applications.selector.services import CalibrationService, ClassifyService


class Command(SymbolCommand):
    help = "Print the Regge partition of a symbol with its selector profile."
    decimal_option = False

    def add_arguments(self, parser):
        parser.add_argument(
            "--kind",
            choices=[choices.KIND_CLASSICAL, choices.KIND_SUPER, choices.KIND_FLAT],
            default=choices.KIND_CLASSICAL,
            help="Read the symbol as classical, super or forbidden flat beta (default classical)."
        )
        super().add_arguments(parser)

    def run(self, symbol, **options):
        kind = options.get("kind")
        convention = CalibrationService.configured_convention()
        if kind == choices.KIND_FLAT:
            flat = FlatService.detect_flat_forbidden(symbol)
            if flat is None:
                raise CommandError(f'{symbol}: {_.not_flat_forbidden}', returncode=EXIT_INVALID_SYMBOL)
            profile = FlatService.underlined_profile(flat, convention)
            partition = FlatService.checked(flat, convention)
        else:
            profile = ClassifyService.profile(symbol, convention)
            partition = ClassifyService.checked(symbol, kind == choices.KIND_SUPER, convention)
        return {
            'parity': ParityService.classify_parity(symbol).code,
            'partition': partition,
            'convention': convention,
            'selectors': SelectorProfileSerializer(profile).data,
        }
