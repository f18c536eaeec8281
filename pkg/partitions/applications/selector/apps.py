from django.apps import AppConfig


class SelectorConfig(AppConfig):
    name = 'partitions.applications.selector'
    label = 'selector'
