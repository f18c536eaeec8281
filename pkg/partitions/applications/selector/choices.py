from partitions import translates as _

CONVENTION_UNORDERED = 'unordered'
CONVENTION_ORDERED = 'ordered'
CONVENTION_AUTO = 'auto'

CONVENTION = (
    (CONVENTION_UNORDERED, _.convention_unordered),
    (CONVENTION_ORDERED, _.convention_ordered),
)

# Number of additional classes a Regge orbit may reach; 3 never occurs
LABELS = (0, 1, 2, 4, 5)
BETA_LABELS = (0, 1)
FORBIDDEN_LABEL = 3

# Cyclic index pairs standing for (circ)
CYCLIC_PAIRS = ((0, 1), (1, 2), (2, 0))
