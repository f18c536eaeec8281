from django.apps import AppConfig


class ClassicalConfig(AppConfig):
    name = 'racah.applications.classical'
    label = 'classical'
