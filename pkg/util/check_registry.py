# util/check_registry.py

CHECKS: dict[str, callable] = {}

CHECK_PREFIX = "check_"

# Decorator used by pvi_heat.verify to register the certification checks,
# in definition order, under the function name without the prefix.

def check(func):
    """Decorate a function in pvi_heat/verify.py to auto-register it."""
    name = func.__name__.removeprefix(CHECK_PREFIX)
    if name in CHECKS:
        raise ValueError(f"check {name!r} is registered twice")
    CHECKS[name] = func
    return func


def check_names() -> list[str]:
    return list(CHECKS)
