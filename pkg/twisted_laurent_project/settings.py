"""
Django settings for twisted_laurent_project project.

The project has no web surface: it hosts the algebra apps and the
management commands behind the ``twl`` executable.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

import structlog
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='twl-local-only-not-a-secret')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'ring',
    'roots',
    'linear',
    'bruhat',
    'steinberg',
    'symbols',
    'extension',
    'audits',
]

# Database - nothing is persisted in it; the test runner still expects one
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Run defaults (overridable per invocation by the twl flags)
TWL_DEFAULT_N = config('TWL_DEFAULT_N', default=2, cast=int)
TWL_DEFAULT_SAMPLES = config('TWL_DEFAULT_SAMPLES', default=200, cast=int)
TWL_DEFAULT_SEED = config('TWL_DEFAULT_SEED', default=0, cast=int)
TWL_DEGREE_CAP = config('TWL_DEGREE_CAP', default=3, cast=int)
TWL_WORD_LENGTH = config('TWL_WORD_LENGTH', default=8, cast=int)
TWL_WORKERS = config('TWL_WORKERS', default=1, cast=int)
TWL_REPORT_DIR = config('TWL_REPORT_DIR', default=str(BASE_DIR / 'reports'))
TWL_LOG_LEVEL = config('TWL_LOG_LEVEL', default='WARNING')


# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': 'INFO',
            'class': 'logging.FileHandler',
            'filename': BASE_DIR / 'logs' / 'twl.log',
            'formatter': 'verbose',
        },
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console', 'file'],
        'level': 'INFO',
    },
    'loggers': {
        app: {
            'handlers': ['console', 'file'],
            'level': TWL_LOG_LEVEL,
            'propagate': False,
        }
        for app in INSTALLED_APPS
    },
}

# Audit events go through structlog and end up in the handlers above
structlog.configure(
    processors=[
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.KeyValueRenderer(key_order=['event'], sort_keys=True),
    ],
    logger_factory=structlog.stdlib.LoggerFactory(),
    wrapper_class=structlog.stdlib.BoundLogger,
    cache_logger_on_first_use=True,
)

# Create logs directory
os.makedirs(BASE_DIR / 'logs', exist_ok=True)
