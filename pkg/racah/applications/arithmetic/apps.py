from django.apps import AppConfig


class ArithmeticConfig(AppConfig):
    name = 'racah.applications.arithmetic'
    label = 'arithmetic'
