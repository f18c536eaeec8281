class Coincidences:
    """Equalities between the shifted j+ and j- of the lambda, mu and kappa columns"""

    def __init__(self, plus, minus, slots):
        k, l, m = slots
        self.plus, self.minus, self.slots = plus, minus, slots
        self.pk, self.pl, self.pm = plus[k], plus[l], plus[m]
        self.mk, self.ml, self.mm = minus[k], minus[l], minus[m]

    def swapped(self):
        """The same coincidences with lambda and mu exchanged"""
        k, l, m = self.slots
        return Coincidences(self.plus, self.minus, (k, m, l))

    def lambda_mu(self):
        return self.pl == self.mm or self.ml == self.pm

    def crossed_lambda_mu(self):
        return self.pl == self.mm and self.ml == self.pm

    def kappa_chain(self):
        return self.pl == self.mm == self.pk or self.ml == self.pm == self.mk

    def with_kappa(self):
        return self.pl == self.mk or self.ml == self.pk or self.pm == self.mk or self.mm == self.pk

    def crossed_with_kappa(self):
        return (self.pl == self.mk and self.ml == self.pk) or (self.pm == self.mk and self.mm == self.pk)

    def parallel_kappa_chain(self):
        return self.pl == self.pm == self.mk or self.ml == self.mm == self.pk


def flat_label_0(p, c):
    if p.n0_pm == 1:
        return p.n0_d <= 2 and c.lambda_mu()
    if p.n0_pm == 2:
        return (
            (p.n0_d in (0, 2) and c.crossed_lambda_mu())
            or (p.n0_d in (1, 3) and c.kappa_chain())
        )
    return p.n0_pm in (3, 4, 6)


def flat_label_1(p, c):
    if p.n0_pm == 0:
        return True
    if p.n0_pm == 1:
        return p.n0_d <= 2 and c.with_kappa()
    if p.n0_pm == 2:
        return (
            (p.n0_d in (0, 2) and c.crossed_with_kappa())
            or c.parallel_kappa_chain()
        )
    return False


FLAT_CLAUSES = (
    (0, flat_label_0),
    (1, flat_label_1),
)


class FlatClauseService:
    @staticmethod
    def labels(profile, plus, minus, slots):
        coincidences = Coincidences(plus, minus, slots)
        orientations = (coincidences, coincidences.swapped())
        return tuple(
            label for label, clause in FLAT_CLAUSES
            if any(clause(profile, c) for c in orientations)
        )
