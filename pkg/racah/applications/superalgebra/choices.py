from racah import translates as _

PATH_PRODUCT = 'product'
PATH_DIRECT = 'direct'
PATH_BOTH = 'both'

PATH = (
    (PATH_PRODUCT, _.path_product),
    (PATH_DIRECT, _.path_direct),
    (PATH_BOTH, _.path_both),
)

# Readings of the j^± slots in the direct-formula phase: (product slot, bilinear slot)
PHASE_PLUS_PLUS = 'plus-plus'
PHASE_PLUS_MINUS = 'plus-minus'
PHASE_MINUS_PLUS = 'minus-plus'
PHASE_MINUS_MINUS = 'minus-minus'
# Scalar-factor phase with l recovered from the brackets
PHASE_DOUBLET = 'doublet'
PHASE_AUTO = 'auto'

PHASE_VARIANTS = (
    PHASE_PLUS_PLUS,
    PHASE_PLUS_MINUS,
    PHASE_MINUS_PLUS,
    PHASE_MINUS_MINUS,
    PHASE_DOUBLET,
)

PHASE_SLOTS = {
    PHASE_PLUS_PLUS: ('plus', 'plus'),
    PHASE_PLUS_MINUS: ('plus', 'minus'),
    PHASE_MINUS_PLUS: ('minus', 'plus'),
    PHASE_MINUS_MINUS: ('minus', 'minus'),
}
