from django.utils.translation import gettext_lazy as _

# Conventions
convention_unordered = _('each unordered index pair counted once')
convention_ordered = _('each ordered index pair counted')

# Violations
unclassifiable = _('no selector clause matches the profile')
ambiguous = _('selector clauses of several labels match the profile')
oracle_disagrees = _('selector label and orbit oracle disagree')
forbidden_label = _('label 3 never occurs')
sign_law = _('beta Regge image does not follow the sign law')
alpha_gamma_invariance = _('alpha or gamma Regge image changed value')
i_factor_invariance = _('I-factor changed under its Regge transformation')
prolongation_mismatch = _('prolonged value disagrees with its identified alpha symbol')
edmonds_mismatch = _('prolonged value disagrees with the flat closed form')
single_sign = _('beta Regge phases took a single sign over the census')

# Prolongation
not_flat_forbidden = _('not a forbidden flat beta symbol')

# Census
format_json_lines = _('one JSON record per line')
format_csv = _('comma separated values with a header row')
classical_invariance = _('Regge image changed the classical value')
path_mismatch = _('product and direct super paths disagree')
label_outside = _('orbit label outside the partition sequence')
