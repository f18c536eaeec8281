from django.apps import AppConfig


class ProlongationConfig(AppConfig):
    name = 'partitions.applications.prolongation'
    label = 'prolongation'
