import os

from .errors import SizeCapExceeded

ENV_MAX_ELEMENTS = "BOXLAT_MAX_ELEMENTS"
DEFAULT_MAX_ELEMENTS = 4096


def max_elements(override=None):
    if override is not None:
        return int(override)
    return int(os.environ.get(ENV_MAX_ELEMENTS, DEFAULT_MAX_ELEMENTS))


def check_size(count, what, override=None):
    cap = max_elements(override)
    if count > cap:
        raise SizeCapExceeded(f"{what}: {count} elements exceeds cap {cap}")
