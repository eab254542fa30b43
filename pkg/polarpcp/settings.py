"""
Django settings for the polarpcp project.

The numerical modules never read these settings; only the management
commands do, and they pass explicit values down to the library.

For the full list of Django settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os

import dj_database_url
from django.core.exceptions import ImproperlyConfigured


# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# No web surface is served, but Django still wants a key.
SECRET_KEY = os.environ.get('SECRET_KEY', 'development-time-only')

DEBUG = os.path.exists('.dev')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "polarpcp",
]

MIDDLEWARE = []


# Database
# Simulation grids can be stored with `manage.py simulate --save`.

DATABASES = {
    "default": dj_database_url.config(
        default="sqlite:///{}".format(os.path.join(BASE_DIR, "db.sqlite3")),
        conn_max_age=600)
}

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Experiment defaults

def positive_int_from_environ(name, default):
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        number = int(value)
    except ValueError:
        number = 0
    if number < 1:
        raise ImproperlyConfigured(
            '{} must be a positive integer, got {!r}.'.format(name, value))
    return number


# Upper bound for the simulate work pool.
POLARPCP_THREADS = positive_int_from_environ(
    'POLARPCP_THREADS', os.cpu_count() or 1)

POLARPCP_SOLVER = {
    'C': 1.0,
    'TOL': 1e-7,
    'MAX_ITERS': 1000,
    'MU_FACTOR': 1.25,
    'MU_GROWTH': 1.5,
}

POLARPCP_LOG_LEVEL = os.environ.get('POLARPCP_LOG_LEVEL', 'INFO')


# Logging

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'polarpcp': {
            'handlers': ['console'],
            'level': POLARPCP_LOG_LEVEL,
            'propagate': False,
        },
    },
}
