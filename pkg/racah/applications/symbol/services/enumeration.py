from racah.applications.symbol.values import Symbol3j
from racah.applications.symbol.services.validation import ValidationService, triangle


class EnumerationService:
    @staticmethod
    def triples(tjmax, ordered=False):
        """Doubled spin triples obeying the triangle condition, lexicographic"""
        for tj1 in range(tjmax + 1):
            for tj2 in range(tj1 if ordered else 0, tjmax + 1):
                for tj3 in range(tj2 if ordered else 0, tjmax + 1):
                    if triangle(tj1, tj2, tj3):
                        yield tj1, tj2, tj3

    @staticmethod
    def symbols(tjmax, ordered=False, step=1):
        for tj in EnumerationService.triples(tjmax, ordered):
            for tm1 in range(-tj[0], tj[0] + 1, step):
                for tm2 in range(-tj[1], tj[1] + 1, step):
                    tm3 = -tm1 - tm2
                    if abs(tm3) <= tj[2]:
                        yield Symbol3j(tj, (tm1, tm2, tm3))

    @staticmethod
    def classical(tjmax, ordered=False):
        for symbol in EnumerationService.symbols(tjmax, ordered, step=2):
            if ValidationService.is_classical(symbol):
                yield symbol

    @staticmethod
    def super(tjmax, ordered=False):
        for symbol in EnumerationService.symbols(tjmax, ordered):
            if ValidationService.is_super(symbol):
                yield symbol
