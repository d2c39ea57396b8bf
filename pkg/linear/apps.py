from django.apps import AppConfig


class LinearConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'linear'
    verbose_name = 'Elementary Matrix Groups over D_tau'
