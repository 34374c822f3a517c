from django.conf import settings

from apps.core.exceptions import MalformedInput

DEFAULTS = {
    "CLOSURE_CAP": 10000,
    "BRUTE_FORCE_CAP": 5000,
    "DIMENSION_WARNING": 8,
    "BALL_VERTEX_WARNING": 100000,
    "WITNESS_WORD_LENGTH": 2,
    "SELFTEST_SEED": 20240101,
    "SELFTEST_SAMPLES": 200,
    "SCHEMA_VERSION": 1,
}


def rigidity_setting(name):
    """
    Value of one key of settings.RIGIDITY, falling back to DEFAULTS.
    """
    return getattr(settings, "RIGIDITY", {}).get(name, DEFAULTS[name])


def resolve_cap(cap, name):
    """
    An explicit cap, or the RIGIDITY default ``name`` when cap is None.
    """
    if cap is None:
        return rigidity_setting(name)
    if isinstance(cap, bool) or not isinstance(cap, int) or cap < 1:
        raise MalformedInput(f"cap: must be a positive integer, got {cap!r}")
    return cap


def warn_dimension(d, log):
    if d > rigidity_setting("DIMENSION_WARNING"):
        log.warning("dimension %d is beyond desk scale; expect long runs", d)
