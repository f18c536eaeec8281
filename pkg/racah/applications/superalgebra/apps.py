from django.apps import AppConfig


class SuperalgebraConfig(AppConfig):
    name = 'racah.applications.superalgebra'
    label = 'superalgebra'
