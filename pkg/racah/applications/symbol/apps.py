from django.apps import AppConfig


class SymbolConfig(AppConfig):
    name = 'racah.applications.symbol'
    label = 'symbol'
