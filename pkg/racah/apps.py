from django.apps import AppConfig


class RacahConfig(AppConfig):
    name = 'racah'
    verbose_name = 'Racah-Wigner calculus'
