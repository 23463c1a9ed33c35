from django.apps import AppConfig


class BirkhoffConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'renormalisation.birkhoff'
