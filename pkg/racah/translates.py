from django.utils.translation import gettext_lazy as _

# Verdicts
valid = _('valid')
odd_column = _('column parity is odd, so(3) needs every column even')
half_perimeter = _('perimeter j1+j2+j3 is not an integer')
triangle = _('triangle condition violated')
projection = _('projection exceeds its spin')
m_sum = _('projections do not sum to zero')
negative_spin = _('spin is negative')
invalid_j_triangle = _('invalid j-triangle')
invalid_parent = _('no parent: the so(3) parent is not a valid 3-j symbol')
invalid_projection = _('invalid projection on the recovered doublet')

# Parities
alpha = _('alpha')
beta = _('beta')
gamma = _('gamma')
even = _('even')
odd = _('odd')

# Commands
see_prolong = _('flat forbidden beta symbol, use the prolong command')

# Kinds
kind_classical = _('classical so(3) 3-j')
kind_super = _('osp(1|2) super 3-j')
kind_flat = _('forbidden flat beta super 3-j')

# Super paths
path_product = _('scalar factor times the so(3) parent')
path_direct = _('self-contained super formula')
path_both = _('both paths, checked against each other')
