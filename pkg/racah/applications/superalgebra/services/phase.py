from math import prod

from racah.exceptions import ParityError
from racah.applications.superalgebra import choices
from racah.applications.symbol.services import DoubletService, ParityService

# Column order feeding the R1 exponent for each matching R_kappa
BETA_ORDERS = {1: (0, 1, 2), 2: (1, 0, 2), 3: (2, 0, 1)}


def sign(exponent):
    return -1 if exponent % 2 else 1


class PhaseService:
    @staticmethod
    def scalar_exponent(tj, tl):
        """Scalar-factor phase exponent on doubled j and l"""
        d1, d2, d3 = (a - b for a, b in zip(tj, tl))
        l1, l2, l3 = tl
        j1, j2, j3 = tj
        return sum(tj) + d1 * d2 * d3 + l1 * (j3 + l3) + l2 * (j1 + l1) + l3 * (j2 + l2)

    @staticmethod
    def variant_exponent(symbol, variant):
        """Phase exponent of the direct formula beyond [j1+] - [j2-]"""
        if variant == choices.PHASE_DOUBLET:
            return PhaseService.scalar_exponent(symbol.tj, DoubletService.parent_spins(symbol))
        product_slot, bilinear_slot = choices.PHASE_SLOTS[variant]
        lines = {'plus': symbol.tjplus, 'minus': symbol.tjminus}
        x = lines[product_slot]
        y = lines[bilinear_slot]
        tm1, tm2, tm3 = symbol.tm
        return sum(symbol.tj) + prod(x) + y[0] * tm2 + y[1] * tm3 + y[2] * tm1

    @staticmethod
    def beta_exponent(symbol, kappa):
        c = symbol.permute(BETA_ORDERS[kappa])
        tj1, tm1, tm2 = c.tj[0], c.tm[0], c.tm[1]
        p1, p2, p3 = c.tjplus
        m1, m2, m3 = c.tjminus
        if (p2 - p3) % 2 or (m3 - m2) % 2:
            raise ParityError(f'{symbol} columns other than {kappa} differ in parity')
        return tj1 + tj1 * tm1 + p1 * (p2 - p3) // 2 + (sum(c.tj) + 1) * ((m3 - m2) // 2 + 1) + tm2 + 1

    @staticmethod
    def beta_phase(symbol, kappa):
        """Sign relating the super value of R_kappa(symbol) to that of symbol"""
        parity = ParityService.classify_parity(symbol)
        if not parity.is_beta() or parity.kappa != kappa:
            raise ParityError(f'{symbol} has parity {parity.code}, not beta {kappa}')
        return sign(PhaseService.beta_exponent(symbol, kappa))
