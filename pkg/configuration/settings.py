"""
Django settings for the racah project.

Every tunable is read from the environment (or a .env file) through
python-decouple, the defaults below are the shipped configuration.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path
from decouple import config

from django.core.management.utils import get_random_secret_key

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default=get_random_secret_key())

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost').split()

ENV = config('ENV', default="DEVELOPMENT")

# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
]

# Database
# Nothing is persisted; the test runner still expects a default alias.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}

# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


"""
Logger
"""
LOG_LEVEL = config('LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': True,
        },
        'racah': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'partitions': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
}


"""
## REST configuration
"""
INSTALLED_APPS += ['rest_framework',]
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'COMPACT_JSON': True,
    'UNICODE_JSON': True,
}


"""
Racah configuration
"""
INSTALLED_APPS += ["racah",] + [
    'racah.applications.arithmetic',
    'racah.applications.symbol',
    'racah.applications.classical',
    'racah.applications.regge',
    'racah.applications.superalgebra',
]

DECIMAL_DIGITS = config('DECIMAL_DIGITS', default=12, cast=int)

# "auto" sweeps the small spins once and keeps the first agreeing reading
SUPER_PHASE_VARIANT = config('SUPER_PHASE_VARIANT', default='plus-plus')
SUPER_PHASE_JMAX = config('SUPER_PHASE_JMAX', default='3')


"""
Partitions configuration
"""
INSTALLED_APPS += [
    'partitions',
    'partitions.applications.selector',
    'partitions.applications.prolongation',
    'partitions.applications.census',
]

SELECTOR_CONVENTION = config('SELECTOR_CONVENTION', default='unordered')
SELECTOR_CALIBRATION_JMAX = config('SELECTOR_CALIBRATION_JMAX', default='4')


"""
## Census configuration
"""
# 0 leaves the degree to --workers
CENSUS_WORKERS = config('CENSUS_WORKERS', default=0, cast=int)
CENSUS_JMAX = config('CENSUS_JMAX', default='4')
CENSUS_FORMAT = config('CENSUS_FORMAT', default='json-lines')
CENSUS_CHUNK_SIZE = config('CENSUS_CHUNK_SIZE', default=64, cast=int)

CENSUS_WRITERS = {
    'json-lines': 'partitions.applications.census.backends.jsonlines.JsonLinesWriter',
    'csv': 'partitions.applications.census.backends.csvfile.CsvWriter',
}
