from django.apps import AppConfig


class SteinbergConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'steinberg'
    verbose_name = 'Steinberg Groups over D_tau'
