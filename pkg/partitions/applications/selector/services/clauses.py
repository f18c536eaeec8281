def label_0(p):
    return p.n0_pm in (3, 4, 6)


def label_1(p):
    return p.n0_pm == 2


def label_2(p):
    return p.n0_pm == 1


def label_4(p):
    if p.n0_pm != 0:
        return False
    if p.n0_m == 0:
        return (
            (p.n0_d == 2 and p.n0_R == 0 and any(plus and minus for plus, minus in p.equal_pairs))
            or (p.n0_d == 0 and p.n0_R == 3)
            or (p.n0_d == 4 and p.n0_R == 0)
        )
    if p.n0_m == 1:
        return p.n0_d == 0 and p.n0_R == 4
    if p.n0_m == 3:
        return p.n0_d == 0 and p.n0_R in (0, 2)
    return False


def label_5(p):
    if p.n0_pm != 0:
        return False
    if p.n0_m == 0:
        return (
            (p.n0_d == 2 and p.n0_R <= 1 and any(plus and not minus for plus, minus in p.equal_pairs))
            or (p.n0_d in (0, 1) and p.n0_R in (0, 1, 2))
            or (p.n0_d == 3 and p.n0_R == 0)
        )
    if p.n0_m == 1:
        return (p.n0_d == 0 and p.n0_R in (0, 1, 2)) or (p.n0_d == 1 and p.n0_R in (0, 1))
    return False


CLAUSES = (
    (0, label_0),
    (1, label_1),
    (2, label_2),
    (4, label_4),
    (5, label_5),
)


class ClauseService:
    @staticmethod
    def labels(profile):
        """Every label whose clause matches; a sound profile matches exactly one"""
        return tuple(label for label, clause in CLAUSES if clause(profile))
