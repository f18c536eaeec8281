from racah import translates as _

EV = 'EV'
OD = 'OD'

COLUMN_PARITY = (
    (EV, _.even),
    (OD, _.odd),
)

ALPHA = 'alpha'
BETA = 'beta'
GAMMA = 'gamma'

PARITY_FAMILY = (
    (ALPHA, _.alpha),
    (BETA, _.beta),
    (GAMMA, _.gamma),
)

PARITY_CODES = (
    'alpha',
    'beta1', 'beta1p',
    'beta2', 'beta2p',
    'beta3', 'beta3p',
    'gamma',
)

VERDICT_VALID = 'VALID'
VERDICT_ODD_COLUMN = 'ODD_COLUMN'
VERDICT_HALF_PERIMETER = 'HALF_PERIMETER'
VERDICT_TRIANGLE = 'TRIANGLE'
VERDICT_PROJECTION = 'PROJECTION'
VERDICT_M_SUM = 'M_SUM'
VERDICT_NEGATIVE_SPIN = 'NEGATIVE_SPIN'
VERDICT_INVALID_J_TRIANGLE = 'INVALID_J_TRIANGLE'
VERDICT_INVALID_PARENT = 'INVALID_PARENT'
VERDICT_INVALID_PROJECTION = 'INVALID_PROJECTION'

VERDICT = (
    (VERDICT_VALID, _.valid),
    (VERDICT_ODD_COLUMN, _.odd_column),
    (VERDICT_HALF_PERIMETER, _.half_perimeter),
    (VERDICT_TRIANGLE, _.triangle),
    (VERDICT_PROJECTION, _.projection),
    (VERDICT_M_SUM, _.m_sum),
    (VERDICT_NEGATIVE_SPIN, _.negative_spin),
    (VERDICT_INVALID_J_TRIANGLE, _.invalid_j_triangle),
    (VERDICT_INVALID_PARENT, _.invalid_parent),
    (VERDICT_INVALID_PROJECTION, _.invalid_projection),
)


def verdict_message(code):
    return str(dict(VERDICT)[code])
