from racah.commands import SymbolCommand
from racah.applications.regge import choices
from racah.applications.regge.serializers import OrbitReportSerializer, ReggeArraySerializer
from racah.applications.regge.services import OrbitService, TransformService
from racah.applications.symbol.services import ParityService, ValidationService


class Command(SymbolCommand):
    help = "Print the Regge orbit of a symbol as its classical classes."
    decimal_option = False

    def add_arguments(self, parser):
        parser.add_argument(
            "--kind",
            choices=[choices.KIND_CLASSICAL, choices.KIND_SUPER],
            default=choices.KIND_CLASSICAL,
            help="Read the symbol as a classical or a super 3-j (default classical)."
        )
        super().add_arguments(parser)

    def run(self, symbol, **options):
        if options.get("kind") == choices.KIND_SUPER:
            ValidationService.check_super(symbol)
            if ParityService.classify_parity(symbol).is_beta():
                report = OrbitService.beta_orbit(symbol)
            else:
                report = OrbitService.orbit(symbol)
        else:
            ValidationService.check_classical(symbol)
            report = OrbitService.orbit(symbol)
        data = dict(OrbitReportSerializer(report).data)
        data['array'] = ReggeArraySerializer(TransformService.regge_array(symbol)).data
        return data
