from fractions import Fraction

from racah.applications.arithmetic.factorial import factorial
from racah.applications.arithmetic.sqrt_rational import SqrtRational
from racah.applications.classical.services.triangle import TriangleService
from racah.applications.symbol.services import ValidationService


def permutation_parity(order):
    inversions = sum(1 for i in range(3) for k in range(i + 1, 3) if order[i] > order[k])
    return inversions % 2


class WignerService:
    @staticmethod
    def z_sum(jp, jm):
        """Alternating sum over z of 1 / (six factorials), exact.

        `jp` and `jm` are the integer triples j+m and j-m. Terms follow each
        other by a rational ratio, so only the first needs factorials.
        """
        jp1, jp2, jp3 = jp
        jm1, jm2, jm3 = jm
        top = jp1 + jp2 - jm3
        low2, low3 = jp2 - jm3, jm1 - jp3
        zmin = max(0, low2, low3)
        zmax = min(top, jm1, jp2)
        if zmin > zmax:
            return Fraction(0)
        c1, c2, c3 = zmin, zmin - low2, zmin - low3
        c4, c5, c6 = top - zmin, jm1 - zmin, jp2 - zmin
        term = Fraction(
            (-1) ** zmin,
            factorial(c1) * factorial(c2) * factorial(c3) * factorial(c4) * factorial(c5) * factorial(c6),
        )
        total = term
        for _ in range(zmin + 1, zmax + 1):
            c1 += 1
            c2 += 1
            c3 += 1
            term *= Fraction(-c4 * c5 * c6, c1 * c2 * c3)
            c4 -= 1
            c5 -= 1
            c6 -= 1
            total += term
        return total

    @staticmethod
    def v_factor(symbol):
        ValidationService.check_classical(symbol)
        jp = tuple(v // 2 for v in symbol.tjplus)
        jm = tuple(v // 2 for v in symbol.tjminus)
        phase = -1 if (jp[0] - jm[1]) % 2 else 1
        radicand = 1
        for a, b in zip(jp, jm):
            radicand *= factorial(a) * factorial(b)
        return SqrtRational.make(phase * WignerService.z_sum(jp, jm), radicand)

    @staticmethod
    def compute_3j(symbol):
        v = WignerService.v_factor(symbol)
        return TriangleService.delta_twice(*symbol.tj) * v

    @staticmethod
    def symmetry_phase(symbol, order, negated=False):
        """Sign picked up by the image `symbol.permute(order)`, negated or not"""
        flips = permutation_parity(order) + (1 if negated else 0)
        if flips % 2 and (sum(symbol.tj) // 2) % 2:
            return -1
        return 1
