import logging

from django.conf import settings
from django.utils.module_loading import import_string
from django.core.exceptions import ImproperlyConfigured

logger = logging.getLogger(__name__)


def setting(name, default=None):
    return getattr(settings, name, default)


def get_backends(backends_list, return_tuples=False, path_extend='', *args, **kwargs):
    backends = []
    for backend_path in backends_list:
        backend_path = backend_path + path_extend
        backend = import_string(backend_path)(*args, **kwargs)
        backends.append((backend, backend_path) if return_tuples else backend)
    if not backends:
        raise ImproperlyConfigured('No backends have been defined.')
    return backends


def get_backend(name, registry_setting, *args, **kwargs):
    registry = setting(registry_setting, {})
    if name not in registry:
        logger.error(f'Unknown backend "{name}" for {registry_setting}')
        raise ImproperlyConfigured(f'Unknown backend "{name}", expected one of {sorted(registry)}.')
    return get_backends([registry[name]], False, '', *args, **kwargs)[0]


def choice_setting(name, choices, default):
    value = setting(name, default)
    if value not in choices:
        logger.error(f'Invalid value {value!r} for {name}')
        raise ImproperlyConfigured(f'{name} must be one of {list(choices)}, got {value!r}.')
    return value


def workers_setting(requested=None):
    """Environment override wins over the requested degree"""
    override = setting('CENSUS_WORKERS', 0)
    if override and override < 0:
        raise ImproperlyConfigured('CENSUS_WORKERS must be a positive integer.')
    if override:
        if requested and requested != override:
            logger.info(f'CENSUS_WORKERS={override} overrides requested workers={requested}')
        return override
    return requested or 1
