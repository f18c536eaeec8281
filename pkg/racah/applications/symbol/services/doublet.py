from racah.applications.symbol.values import HalfInt, Symbol3j


class DoubletService:
    @staticmethod
    def recover_twice(tj, tm):
        # 2l = [j+m] + [j-m], in doubled units
        return (tj + tm) // 2 + (tj - tm) // 2

    @staticmethod
    def recover_doublet(column):
        return HalfInt(DoubletService.recover_twice(column.tj, column.tm))

    @staticmethod
    def parent_spins(symbol):
        return tuple(DoubletService.recover_twice(tj, tm) for tj, tm in zip(symbol.tj, symbol.tm))

    @staticmethod
    def parent(symbol):
        """The so(3) parent (l; m); raises InvalidSymbol when an l is negative"""
        return Symbol3j(DoubletService.parent_spins(symbol), symbol.tm)
