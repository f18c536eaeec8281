from fractions import Fraction

from racah.applications.arithmetic.factorial import factorial
from racah.applications.arithmetic.sqrt_rational import SqrtRational
from racah.applications.symbol.services import ValidationService


class OracleService:
    @staticmethod
    def clebsch_gordan_squared(tj1, tm1, tj2, tm2, tj12, tm12):
        """Sign and square of <j1 m1 j2 m2 | j12 m12>, arguments doubled"""
        if (tm1 + tm2 != tm12
                or tj1 + tj2 < tj12
                or abs(tj1 - tj2) > tj12
                or (tj1 + tj2 + tj12) % 2):
            return 0, Fraction(0)
        kmin = -min(0, (tj12 - tj2 + tm1) // 2, (tj12 - tj1 - tm2) // 2)
        kmax = min((tj1 + tj2 - tj12) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
        if kmin > kmax:
            return 0, Fraction(0)
        c1 = kmin
        c2 = (tj1 + tj2 - tj12) // 2 - kmin
        c3 = (tj1 - tm1) // 2 - kmin
        c4 = (tj2 + tm2) // 2 - kmin
        c5 = (tj12 - tj2 + tm1) // 2 + kmin
        c6 = (tj12 - tj1 - tm2) // 2 + kmin
        c = Fraction(
            (-1) ** kmin,
            factorial(c1) * factorial(c2) * factorial(c3) * factorial(c4) * factorial(c5) * factorial(c6),
        )
        r = c
        for _ in range(kmin + 1, kmax + 1):
            c1 += 1
            c5 += 1
            c6 += 1
            c *= Fraction(-c2 * c3 * c4, c1 * c5 * c6)
            c2 -= 1
            c3 -= 1
            c4 -= 1
            r += c
        if r == 0:
            return 0, Fraction(0)
        square = (
            Fraction(
                (tj12 + 1)
                * factorial((tj12 + tj1 - tj2) // 2)
                * factorial((tj12 - tj1 + tj2) // 2)
                * factorial((tj1 + tj2 - tj12) // 2),
                factorial((tj1 + tj2 + tj12) // 2 + 1),
            )
            * factorial((tj12 + tm12) // 2)
            * factorial((tj12 - tm12) // 2)
            * factorial((tj1 - tm1) // 2)
            * factorial((tj1 + tm1) // 2)
            * factorial((tj2 - tm2) // 2)
            * factorial((tj2 + tm2) // 2)
            * r ** 2
        )
        return (1 if r > 0 else -1), square

    @staticmethod
    def racah_oracle(symbol):
        """3-j value through the Clebsch-Gordan coefficient it is proportional to"""
        ValidationService.check_classical(symbol)
        (tj1, tj2, tj3), (tm1, tm2, tm3) = symbol.tj, symbol.tm
        sign, square = OracleService.clebsch_gordan_squared(tj1, tm1, tj2, tm2, tj3, -tm3)
        if sign == 0:
            return SqrtRational.zero()
        if ((tj1 - tj2 - tm3) // 2) % 2:
            sign = -sign
        return SqrtRational(sign, square / (tj3 + 1))
