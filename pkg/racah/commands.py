import sys
import logging
import argparse

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from racah.exceptions import DomainError, InvalidSymbol, InvariantViolation
from racah.applications.arithmetic.serializers import DecimalSqrtRationalSerializer, SqrtRationalSerializer
from racah.applications.symbol.values import Symbol3j

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_INVALID_SYMBOL = 2
EXIT_INVARIANT = 3


def render(data):
    return JSONRenderer().render(data).decode()


class CalculusCommand(BaseCommand):
    """Usage errors leave with status 1"""

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)

        def error(message):
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                sys.stderr.write(f'{parser.prog}: error: {message}\n')
                sys.exit(EXIT_USAGE)
            raise CommandError(f'Error: {message}', returncode=EXIT_USAGE)

        parser.error = error
        return parser

    def write(self, data):
        self.stdout.write(render(data))


class SymbolCommand(CalculusCommand):
    """Base for the commands reading one symbol as `j1 j2 j3 / m1 m2 m3`.

    Options go before the symbol; everything after the first spin belongs
    to the symbol, so negative projections such as -1/2 need no quoting.
    """
    decimal_option = True

    def add_arguments(self, parser):
        if self.decimal_option:
            parser.add_argument(
                "--decimal",
                action="store_true",
                help="Add a 12-digit decimal rendering of each value."
            )
        parser.add_argument(
            "symbol",
            nargs=argparse.REMAINDER,
            help="The symbol as j1 j2 j3 / m1 m2 m3, e.g. 1 1 0 / 1 -1 0."
        )

    def parse_symbol(self, tokens):
        try:
            return Symbol3j.parse(tokens)
        except InvalidSymbol as e:
            raise CommandError(str(e), returncode=EXIT_INVALID_SYMBOL)
        except DomainError as e:
            raise CommandError(str(e), returncode=EXIT_USAGE)

    def value_data(self, value, decimal=False):
        serializer_class = DecimalSqrtRationalSerializer if decimal else SqrtRationalSerializer
        return serializer_class(value).data

    def run(self, symbol, **options):
        raise NotImplementedError('subclasses of SymbolCommand must provide a run() method')

    def handle(self, *args, **options):
        symbol = self.parse_symbol(options.pop("symbol", None) or [])
        try:
            data = self.run(symbol, **options)
        except DomainError as e:
            raise CommandError(str(e), returncode=EXIT_INVALID_SYMBOL)
        except InvariantViolation as e:
            logger.error(f'{symbol}: {e}')
            raise CommandError(str(e), returncode=EXIT_INVARIANT)
        if data is not None:
            self.write(data)
