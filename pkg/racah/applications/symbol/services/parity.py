from racah.applications.symbol import choices
from racah.applications.symbol.values import ALPHA, BETA, GAMMA, HalfInt


class ParityService:
    @staticmethod
    def column_parity(column):
        """EV when 2(j+m) is even"""
        return choices.EV if (column.tj + column.tm) % 2 == 0 else choices.OD

    @staticmethod
    def parities(symbol):
        return tuple(choices.EV if (tj + tm) % 2 == 0 else choices.OD for tj, tm in zip(symbol.tj, symbol.tm))

    @staticmethod
    def classify_parity(symbol):
        parities = ParityService.parities(symbol)
        odd = [k for k, parity in enumerate(parities, 1) if parity == choices.OD]
        if not odd:
            return ALPHA
        if len(odd) == 3:
            return GAMMA
        if len(odd) == 2:
            even = next(k for k in (1, 2, 3) if k not in odd)
            return BETA(even, primed=False)
        return BETA(odd[0], primed=True)

    @staticmethod
    def is_integer_perimeter(symbol):
        return HalfInt(sum(symbol.tj)).is_integer()
