from django.apps import AppConfig


class CensusConfig(AppConfig):
    name = 'partitions.applications.census'
    label = 'census'
