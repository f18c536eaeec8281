from racah.exceptions import DomainError
from racah.applications.regge import choices
from racah.applications.regge.values import ReggeArray
from racah.applications.symbol.values import Symbol3j


def half(value):
    if value % 2:
        raise DomainError('Regge image would carry a quarter-integer spin')
    return value // 2


class TransformService:
    @staticmethod
    def regge_array(symbol):
        return ReggeArray.of(symbol)

    @staticmethod
    def apply_regge(symbol, kappa):
        """Image of `symbol` under R_kappa, no phase attached"""
        (tj1, tj2, tj3) = symbol.tj
        (p1, p2, p3), (m1, m2, m3) = symbol.tjplus, symbol.tjminus
        if kappa == choices.R1:
            tj = (tj1, half(m3 + m2), half(p3 + p2))
            tm = (tj2 - tj3, half(m3 - m2), half(p3 - p2))
        elif kappa == choices.R2:
            tj = (half(p1 + p3), tj2, half(m1 + m3))
            tm = (half(p1 - p3), tj3 - tj1, half(m1 - m3))
        elif kappa == choices.R3:
            tj = (half(m2 + m1), half(p2 + p1), tj3)
            tm = (half(m2 - m1), half(p2 - p1), tj1 - tj2)
        elif kappa == choices.R4:
            tj = (half(m3 + m2), half(m1 + m3), half(m2 + m1))
            tm = tuple(a - b for a, b in zip(tj, (p1, p2, p3)))
        elif kappa == choices.R5:
            tj = (half(p3 + p2), half(p1 + p3), half(p2 + p1))
            tm = tuple(b - a for a, b in zip(tj, (m1, m2, m3)))
        else:
            raise DomainError(f'no Regge transformation R{kappa}')
        return Symbol3j(tj, tm)
