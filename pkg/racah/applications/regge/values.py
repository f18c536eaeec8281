from racah.applications.symbol.values import HalfInt


class ReggeArray:
    """3x3 array, stored doubled: the triangle row, then the j-m row, then the j+m row"""
    __slots__ = ('twice',)

    def __init__(self, twice):
        self.twice = tuple(tuple(row) for row in twice)

    @classmethod
    def of(cls, symbol):
        tj1, tj2, tj3 = symbol.tj
        return cls((
            (-tj1 + tj2 + tj3, tj1 - tj2 + tj3, tj1 + tj2 - tj3),
            symbol.tjminus,
            symbol.tjplus,
        ))

    @property
    def rows(self):
        return tuple(tuple(HalfInt(v) for v in row) for row in self.twice)

    @property
    def columns(self):
        return tuple(zip(*self.rows))

    def line_sums(self):
        twice = list(self.twice) + list(zip(*self.twice))
        return {HalfInt(sum(line)) for line in twice}

    def is_magic(self):
        return len(self.line_sums()) == 1

    def __eq__(self, other):
        return isinstance(other, ReggeArray) and self.twice == other.twice

    def __hash__(self):
        return hash(self.twice)

    def __repr__(self):
        rows = ' | '.join(' '.join(str(v) for v in row) for row in self.rows)
        return f'ReggeArray({rows})'


class SetClass:
    """The twelve classical images of a symbol, held by its least member"""
    __slots__ = ('canonical',)

    def __init__(self, canonical):
        self.canonical = canonical

    @property
    def key(self):
        return self.canonical.key

    def __eq__(self, other):
        return isinstance(other, SetClass) and self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f'SetClass{self.canonical}'


class OrbitReport:
    __slots__ = ('classes',)

    def __init__(self, classes):
        self.classes = sorted(classes)

    @property
    def n_empty(self):
        return len(self.classes) - 1

    def __len__(self):
        return len(self.classes)

    def __contains__(self, item):
        return item in self.classes

    def __eq__(self, other):
        return isinstance(other, OrbitReport) and self.classes == other.classes

    def __repr__(self):
        return f'OrbitReport(n_empty={self.n_empty}, classes={self.classes})'
