class SelectorProfile:
    """Zero counts of the j+/j- differences of a symbol"""
    __slots__ = ('n0_d', 'n0_pm', 'n0_m', 'n0_R', 'equal_pairs')

    def __init__(self, n0_d, n0_pm, n0_m, n0_R, equal_pairs):
        self.n0_d = n0_d
        self.n0_pm = n0_pm
        self.n0_m = n0_m
        self.n0_R = n0_R
        # (j+ equal, j- equal) for the pairs (1,2), (2,3), (3,1)
        self.equal_pairs = tuple(equal_pairs)

    def as_tuple(self):
        return self.n0_d, self.n0_pm, self.n0_m, self.n0_R

    def __eq__(self, other):
        return isinstance(other, SelectorProfile) and (self.as_tuple(), self.equal_pairs) == (other.as_tuple(), other.equal_pairs)

    def __hash__(self):
        return hash((self.as_tuple(), self.equal_pairs))

    def __repr__(self):
        return 'SelectorProfile(n0_d=%d, n0_pm=%d, n0_m=%d, n0_R=%d)' % self.as_tuple()


class CalibrationRecord:
    __slots__ = ('jmax', 'total', 'agreements', 'chosen')

    def __init__(self, jmax, total, agreements, chosen):
        self.jmax = jmax
        self.total = total
        self.agreements = dict(agreements)
        self.chosen = chosen

    def __repr__(self):
        return f'CalibrationRecord(jmax={self.jmax}, chosen={self.chosen}, agreements={self.agreements})'
