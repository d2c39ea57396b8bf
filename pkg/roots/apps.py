from django.apps import AppConfig


class RootsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'roots'
    verbose_name = 'Affine Root System of Type A'
