from django.apps import AppConfig


class ModelmapsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'renormalisation.modelmaps'
