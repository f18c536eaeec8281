from django.apps import AppConfig


class ReggeConfig(AppConfig):
    name = 'racah.applications.regge'
    label = 'regge'
