from django.core.management.base import CommandError

from racah import translates as _
from racah.commands import SymbolCommand, EXIT_INVALID_SYMBOL
from racah.exceptions import ForbiddenParent
from racah.applications.superalgebra import choices
from racah.applications.superalgebra.services import SuperValueService


class Command(SymbolCommand):
    help = "Print the exact osp(1|2) super 3-j value of a symbol."

    def add_arguments(self, parser):
        parser.add_argument(
            "--path",
            choices=[value for value, label in choices.PATH],
            default=choices.PATH_PRODUCT,
            help="Evaluate through the parent product, the direct formula, or both checked together."
        )
        super().add_arguments(parser)

    def run(self, symbol, **options):
        try:
            value = SuperValueService.compute_super_3j(symbol, options.get("path"))
        except ForbiddenParent as e:
            message = str(e)
            if e.flat_index is not None:
                message = f'{message} ({_.see_prolong})'
            raise CommandError(message, returncode=EXIT_INVALID_SYMBOL)
        return self.value_data(value, options.get("decimal"))
