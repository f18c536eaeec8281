from racah.exceptions import DomainError
from racah.applications.symbol.values import HalfInt
from racah.applications.regge.choices import KIND, KIND_CLASSICAL
from partitions.applications.census import choices


class CensusConfig:
    __slots__ = ('jmax', 'kind', 'format', 'workers')

    def __init__(self, jmax, kind=KIND_CLASSICAL, format=choices.FORMAT_JSON_LINES, workers=None):
        jmax = HalfInt.of(jmax)
        if jmax.twice < 0:
            raise DomainError(f'jmax must be nonnegative, got {jmax}')
        if kind not in dict(KIND):
            raise DomainError(f'unknown census kind {kind!r}')
        if format not in dict(choices.FORMAT):
            raise DomainError(f'unknown census format {format!r}')
        if workers is not None and workers < 1:
            raise DomainError(f'workers must be positive, got {workers}')
        self.jmax = jmax
        self.kind = kind
        self.format = format
        self.workers = workers

    @property
    def tjmax(self):
        return self.jmax.twice

    def __repr__(self):
        return f'CensusConfig(jmax={self.jmax}, kind={self.kind}, format={self.format}, workers={self.workers})'


class CensusRecord:
    """One SetClass of the census, through its canonical representative"""
    __slots__ = ('symbol', 'parity', 'value', 'partition', 'oracle', 'orbit_classes', 'profile')

    def __init__(self, symbol, parity, value, partition, oracle, orbit_classes, profile):
        self.symbol = symbol
        self.parity = parity
        self.value = value
        self.partition = partition
        self.oracle = oracle
        self.orbit_classes = orbit_classes
        self.profile = profile

    @property
    def key(self):
        return self.symbol.key


class ClassOutcome:
    __slots__ = ('record', 'violations', 'phases', 'checks')

    def __init__(self, record, violations=(), phases=(), checks=0):
        self.record = record
        self.violations = list(violations)
        self.phases = list(phases)
        self.checks = checks


class CensusReport:
    def __init__(self, config, calibration=None, convention=None, phase_variant=None):
        self.config = config
        self.calibration = calibration
        self.convention = convention
        self.phase_variant = phase_variant
        self.counts = {}
        self.violations = []
        self.signs = {1: 0, -1: 0}
        self.checks = 0
        self.total = 0

    def add(self, outcome):
        self.total += 1
        self.counts[outcome.record.oracle] = self.counts.get(outcome.record.oracle, 0) + 1
        self.violations.extend(outcome.violations)
        self.checks += outcome.checks
        for phase in outcome.phases:
            self.signs[phase] += 1

    @property
    def ok(self):
        return not self.violations

    def __repr__(self):
        return f'CensusReport({self.config!r}, total={self.total}, violations={len(self.violations)})'
