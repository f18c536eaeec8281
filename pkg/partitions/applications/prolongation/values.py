from racah.exceptions import DomainError, ParityError
from racah.applications.symbol.services import ParityService


class FlatBetaSymbol:
    """Forbidden beta_kappa symbol on a flat triangle j_kappa = j_lambda + j_mu.

    `kappa` is 1-based; lam and mu follow it cyclically.
    """
    __slots__ = ('base', 'kappa')

    def __init__(self, base, kappa):
        if kappa not in (1, 2, 3):
            raise DomainError(f'kappa must be 1, 2 or 3, got {kappa!r}')
        parity = ParityService.classify_parity(base)
        if not parity.is_beta() or parity.primed or parity.kappa != kappa:
            raise ParityError(f'{base} has parity {parity.code}, expected beta{kappa}')
        self.base = base
        self.kappa = kappa
        k, l, m = self.slots
        tj = base.tj
        if tj[k] != tj[l] + tj[m]:
            raise DomainError(f'{base} is not flat in column {kappa}')
        if tj[l] < 1 or tj[m] < 1:
            raise DomainError(f'{base} has a zero spin beside column {kappa}')

    @property
    def slots(self):
        """0-based (kappa, lambda, mu)"""
        k = self.kappa - 1
        return k, (k + 1) % 3, (k + 2) % 3

    def __eq__(self, other):
        return isinstance(other, FlatBetaSymbol) and (self.base, self.kappa) == (other.base, other.kappa)

    def __hash__(self):
        return hash((self.base, self.kappa))

    def __repr__(self):
        return f'FlatBetaSymbol({self.base}, kappa={self.kappa})'


class UnderlinedSpins:
    """Doubled spins J_lambda = j_lambda - 1/2, J_mu = j_mu - 1/2, J_kappa = j_kappa - 1"""
    __slots__ = ('tj_lambda', 'tj_mu', 'tj_kappa')

    def __init__(self, tj_lambda, tj_mu, tj_kappa):
        self.tj_lambda = tj_lambda
        self.tj_mu = tj_mu
        self.tj_kappa = tj_kappa

    @classmethod
    def of(cls, flat):
        k, l, m = flat.slots
        tj = flat.base.tj
        return cls(tj[l] - 1, tj[m] - 1, tj[k] - 2)

    def in_columns(self, flat):
        k, l, m = flat.slots
        tj = [0, 0, 0]
        tj[k], tj[l], tj[m] = self.tj_kappa, self.tj_lambda, self.tj_mu
        return tuple(tj)
