import re
from fractions import Fraction
from functools import total_ordering
from itertools import permutations

from racah.exceptions import DomainError, InvalidSymbol
from racah.applications.symbol import choices

HALFINT_PATTERN = re.compile(r'(-?\d+)(/2)?')


@total_ordering
class HalfInt:
    """An integer or half-odd-integer, stored as twice its value"""
    __slots__ = ('_twice',)

    def __init__(self, twice):
        if isinstance(twice, bool) or not isinstance(twice, int):
            raise DomainError(f'HalfInt needs an integer twice-value, got {twice!r}')
        self._twice = twice

    @classmethod
    def parse(cls, text):
        match = HALFINT_PATTERN.fullmatch(text or '')
        if match is None:
            raise DomainError(f'not a spin value: {text!r}')
        numerator = int(match.group(1))
        if match.group(2) is None:
            return cls(2 * numerator)
        if numerator % 2 == 0:
            raise DomainError(f'half-integer numerator must be odd: {text!r}')
        return cls(numerator)

    @classmethod
    def of(cls, value):
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        twice = Fraction(value) * 2
        if twice.denominator != 1:
            raise DomainError(f'{value!r} is not a multiple of 1/2')
        return cls(int(twice))

    @property
    def twice(self):
        return self._twice

    def is_integer(self):
        return self._twice % 2 == 0

    def floor(self):
        return self._twice // 2

    def as_fraction(self):
        return Fraction(self._twice, 2)

    def __add__(self, other):
        return HalfInt(self._twice + HalfInt.of(other)._twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self._twice - HalfInt.of(other)._twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other)._twice - self._twice)

    def __neg__(self):
        return HalfInt(-self._twice)

    def __abs__(self):
        return HalfInt(abs(self._twice))

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self._twice == other._twice
        if isinstance(other, (int, Fraction)):
            return Fraction(self._twice, 2) == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfInt):
            return self._twice < other._twice
        if isinstance(other, (int, Fraction)):
            return Fraction(self._twice, 2) < other
        return NotImplemented

    def __hash__(self):
        return hash(Fraction(self._twice, 2))

    def __str__(self):
        if self.is_integer():
            return str(self._twice // 2)
        return f'{self._twice}/2'

    def __repr__(self):
        return f'HalfInt({self})'


class Column:
    """One (j, m) column; j+m and j-m are then multiples of 1/2 of equal parity"""
    __slots__ = ('tj', 'tm')

    def __init__(self, j, m):
        j, m = HalfInt.of(j), HalfInt.of(m)
        if j.twice < 0:
            raise InvalidSymbol(choices.VERDICT_NEGATIVE_SPIN)
        self.tj = j.twice
        self.tm = m.twice

    @property
    def j(self):
        return HalfInt(self.tj)

    @property
    def m(self):
        return HalfInt(self.tm)

    @property
    def jplus(self):
        return HalfInt(self.tj + self.tm)

    @property
    def jminus(self):
        return HalfInt(self.tj - self.tm)

    def __eq__(self, other):
        return isinstance(other, Column) and (self.tj, self.tm) == (other.tj, other.tm)

    def __hash__(self):
        return hash((self.tj, self.tm))

    def __repr__(self):
        return f'Column({self.j}, {self.m})'


class Symbol3j:
    """Three columns with m1 + m2 + m3 = 0, held as doubled integers"""
    __slots__ = ('tj', 'tm')

    def __init__(self, tj, tm):
        tj, tm = tuple(tj), tuple(tm)
        if len(tj) != 3 or len(tm) != 3:
            raise DomainError('a 3-j symbol has three columns')
        if any(isinstance(v, bool) or not isinstance(v, int) for v in tj + tm):
            raise DomainError('doubled spins and projections must be integers')
        if min(tj) < 0:
            raise InvalidSymbol(choices.VERDICT_NEGATIVE_SPIN)
        if sum(tm) != 0:
            raise InvalidSymbol(choices.VERDICT_M_SUM)
        self.tj = tj
        self.tm = tm

    @classmethod
    def of(cls, j, m):
        return cls([HalfInt.of(v).twice for v in j], [HalfInt.of(v).twice for v in m])

    @classmethod
    def from_columns(cls, columns):
        return cls([c.tj for c in columns], [c.tm for c in columns])

    @classmethod
    def parse(cls, tokens):
        """Read the grammar `j1 j2 j3 / m1 m2 m3`"""
        tokens = list(tokens)
        if len(tokens) != 7 or tokens[3] != '/':
            raise DomainError('a symbol reads: j1 j2 j3 / m1 m2 m3')
        return cls.of(tokens[:3], tokens[4:])

    @property
    def columns(self):
        return tuple(Column(HalfInt(tj), HalfInt(tm)) for tj, tm in zip(self.tj, self.tm))

    @property
    def j(self):
        return tuple(HalfInt(v) for v in self.tj)

    @property
    def m(self):
        return tuple(HalfInt(v) for v in self.tm)

    @property
    def tjplus(self):
        return tuple(a + b for a, b in zip(self.tj, self.tm))

    @property
    def tjminus(self):
        return tuple(a - b for a, b in zip(self.tj, self.tm))

    @property
    def perimeter(self):
        return HalfInt(sum(self.tj))

    @property
    def key(self):
        return self.tj + self.tm

    def permute(self, order):
        return Symbol3j([self.tj[k] for k in order], [self.tm[k] for k in order])

    def negate(self):
        return Symbol3j(self.tj, [-v for v in self.tm])

    def images(self):
        """The twelve classical images with their (order, negated) labels"""
        for order in permutations(range(3)):
            image = self.permute(order)
            yield image, order, False
            yield image.negate(), order, True

    def tokens(self):
        return [str(v) for v in self.j] + ['/'] + [str(v) for v in self.m]

    def __eq__(self, other):
        return isinstance(other, Symbol3j) and self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Symbol3j({' '.join(self.tokens())})"

    def __str__(self):
        j = ' '.join(str(v) for v in self.j)
        m = ' '.join(str(v) for v in self.m)
        return f'({j}; {m})'


class ParityClass:
    """ALPHA, BETA(kappa, primed) or GAMMA"""
    __slots__ = ('family', 'kappa', 'primed')

    def __init__(self, family, kappa=None, primed=False):
        if family not in dict(choices.PARITY_FAMILY):
            raise DomainError(f'unknown parity family {family!r}')
        if (family == choices.BETA) != (kappa in (1, 2, 3)):
            raise DomainError('only beta parities carry an index 1..3')
        self.family = family
        self.kappa = kappa
        self.primed = bool(primed) if family == choices.BETA else False

    @property
    def code(self):
        if self.family == choices.BETA:
            return f"beta{self.kappa}{'p' if self.primed else ''}"
        return self.family

    def is_beta(self):
        return self.family == choices.BETA

    def __eq__(self, other):
        return isinstance(other, ParityClass) and self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return f'ParityClass({self.code})'


ALPHA = ParityClass(choices.ALPHA)
GAMMA = ParityClass(choices.GAMMA)


def BETA(kappa, primed=False):
    return ParityClass(choices.BETA, kappa, primed)
