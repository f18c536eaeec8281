from racah.commands import SymbolCommand
from racah.applications.classical.services import WignerService


class Command(SymbolCommand):
    help = "Print the exact Wigner 3-j value of a symbol."

    def run(self, symbol, **options):
        value = WignerService.compute_3j(symbol)
        return self.value_data(value, options.get("decimal"))
