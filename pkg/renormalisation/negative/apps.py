from django.apps import AppConfig


class NegativeConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'renormalisation.negative'
