from racah.applications.regge.values import ReggeArray
from partitions.applications.selector import choices
from partitions.applications.selector.values import SelectorProfile


def pair_count(a, b):
    return sum(1 for i, k in ((0, 1), (0, 2), (1, 2)) if a[i] == b[k])


def cross_count(a, b):
    return sum(1 for i in range(3) for k in range(3) if i != k and a[i] == b[k])


class ProfileService:
    @staticmethod
    def counts(plus, minus, convention=choices.CONVENTION_UNORDERED):
        """N0d and N0± of doubled j+ and j- triples"""
        n0_d = pair_count(plus, plus) + pair_count(minus, minus)
        n0_pm = cross_count(plus, minus)
        if convention == choices.CONVENTION_ORDERED:
            return 2 * n0_d, 2 * n0_pm
        return n0_d, n0_pm

    @staticmethod
    def selector_profile(symbol, convention=choices.CONVENTION_UNORDERED):
        plus, minus = symbol.tjplus, symbol.tjminus
        n0_d, n0_pm = ProfileService.counts(plus, minus, convention)
        n0_m = sum(1 for v in symbol.tm if v == 0)
        triangle_row = ReggeArray.of(symbol).twice[0]
        n0_R = sum(1 for k in range(3) if triangle_row[k] == minus[k]) + sum(
            1 for k in range(3) if triangle_row[k] == plus[k])
        equal_pairs = tuple((plus[i] == plus[k], minus[i] == minus[k]) for i, k in choices.CYCLIC_PAIRS)
        return SelectorProfile(n0_d, n0_pm, n0_m, n0_R, equal_pairs)
