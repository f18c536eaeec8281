from itertools import permutations

from racah.applications.regge.values import SetClass
from racah.applications.symbol.values import Symbol3j

ORDERS = tuple(permutations(range(3)))


class SymmetryService:
    @staticmethod
    def canonical_key(tj, tm):
        best = None
        for order in ORDERS:
            j = tuple(tj[k] for k in order)
            m = tuple(tm[k] for k in order)
            for key in (j + m, j + tuple(-v for v in m)):
                if best is None or key < best:
                    best = key
        return best

    @staticmethod
    def classical_set(symbol):
        key = SymmetryService.canonical_key(symbol.tj, symbol.tm)
        if key == symbol.key:
            return SetClass(symbol)
        return SetClass(Symbol3j(key[:3], key[3:]))

    @staticmethod
    def is_canonical(symbol):
        return SymmetryService.canonical_key(symbol.tj, symbol.tm) == symbol.key
